#pragma once

#include "automorphism.hpp"
#include "corpus.hpp"
#include "divisor.hpp"
#include "error.hpp"
#include "format.hpp"
#include "galois.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "quotient.hpp"
#include "vertex_map.hpp"
