#pragma once

#include "cubrecon/cube_word.hpp"
#include "cubrecon/cubical_complex.hpp"
#include "cubrecon/embeddability.hpp"
#include "cubrecon/errors.hpp"
#include "cubrecon/generators.hpp"
#include "cubrecon/gf2_matrix.hpp"
#include "cubrecon/homology.hpp"
#include "cubrecon/io.hpp"
#include "cubrecon/manifold.hpp"
#include "cubrecon/reconstruction.hpp"
#include "cubrecon/smith_normal_form.hpp"
