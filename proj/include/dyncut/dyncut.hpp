#pragma once

#include "dyncut/error.hpp"
#include "dyncut/graph.hpp"
#include "dyncut/mincut.hpp"
#include "dyncut/tree.hpp"
#include "dyncut/cut_tree.hpp"
#include "dyncut/dynamic.hpp"
#include "dyncut/oracle.hpp"
#include "dyncut/stream.hpp"
#include "dyncut/replay.hpp"
