#pragma once

#include "vcs/charge.hpp"
#include "vcs/cube_complex.hpp"
#include "vcs/decomposition.hpp"
#include "vcs/error.hpp"
#include "vcs/homology.hpp"
#include "vcs/integer.hpp"
#include "vcs/manifold_io.hpp"
#include "vcs/manifold_model.hpp"
#include "vcs/wallspace.hpp"
