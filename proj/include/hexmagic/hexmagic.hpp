#pragma once

#include "hexmagic/rational.hpp"
#include "hexmagic/hexgrid.hpp"
#include "hexmagic/hexagon.hpp"
#include "hexmagic/verifier.hpp"
#include "hexmagic/linear_form.hpp"
#include "hexmagic/linalg.hpp"
#include "hexmagic/templates.hpp"
#include "hexmagic/algebra.hpp"
#include "hexmagic/search.hpp"
