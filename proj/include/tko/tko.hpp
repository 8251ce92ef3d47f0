#pragma once

// Umbrella header: combinatorial input -> mod-2 face ring -> Sq2 ->
// A(1)-module decomposition -> Adams charts -> connective and periodic
// KO-theory.

#include "tko/a1_decomposition.hpp"
#include "tko/char_matrix.hpp"
#include "tko/errors.hpp"
#include "tko/examples.hpp"
#include "tko/ext_chart.hpp"
#include "tko/f2.hpp"
#include "tko/face_ring.hpp"
#include "tko/ko_groups.hpp"
#include "tko/pipeline.hpp"
#include "tko/problem_spec.hpp"
#include "tko/render.hpp"
#include "tko/report.hpp"
#include "tko/simplicial_complex.hpp"
#include "tko/steenrod.hpp"
