#pragma once

#include "cdg/canonical.hpp"
#include "cdg/checks.hpp"
#include "cdg/constructions.hpp"
#include "cdg/enumerate.hpp"
#include "cdg/graph.hpp"
#include "cdg/io.hpp"
#include "cdg/lewis.hpp"
#include "cdg/report.hpp"
#include "cdg/traversal.hpp"
