#ifndef TKC_TKC_HPP
#define TKC_TKC_HPP

#include "error.hpp"
#include "vertex_set.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "families.hpp"
#include "domination.hpp"
#include "coalition.hpp"
#include "constructions.hpp"
#include "bounds.hpp"
#include "set_partitions.hpp"
#include "solver.hpp"
#include "enumerate.hpp"
#include "scan.hpp"

#endif
