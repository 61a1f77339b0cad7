#pragma once

#include "turaev/laurent.hpp"
#include "turaev/diagram.hpp"
#include "turaev/moves.hpp"
#include "turaev/states.hpp"
#include "turaev/polynomials.hpp"
#include "turaev/ribbon.hpp"
#include "turaev/cutting.hpp"
#include "turaev/khovanov.hpp"
#include "turaev/catalog.hpp"
#include "turaev/json.hpp"
