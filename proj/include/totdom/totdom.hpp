#pragma once

#include "totdom/constructs.hpp"
#include "totdom/edge_list.hpp"
#include "totdom/error.hpp"
#include "totdom/families.hpp"
#include "totdom/graph.hpp"
#include "totdom/oracles.hpp"
#include "totdom/report_io.hpp"
#include "totdom/solver.hpp"
#include "totdom/verify.hpp"
#include "totdom/vertex_set.hpp"
