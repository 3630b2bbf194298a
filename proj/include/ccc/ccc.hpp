#pragma once

#include "ccc/bounds.hpp"
#include "ccc/catalog.hpp"
#include "ccc/clique.hpp"
#include "ccc/code.hpp"
#include "ccc/code_io.hpp"
#include "ccc/compose.hpp"
#include "ccc/design.hpp"
#include "ccc/design_constructions.hpp"
#include "ccc/design_existence.hpp"
#include "ccc/design_io.hpp"
#include "ccc/errors.hpp"
#include "ccc/report.hpp"
#include "ccc/search.hpp"
#include "ccc/transform.hpp"
