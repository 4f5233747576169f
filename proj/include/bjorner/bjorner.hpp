#pragma once

#include "bjorner/face_vectors.hpp"
#include "bjorner/genfun.hpp"
#include "bjorner/matrices.hpp"
#include "bjorner/matrix.hpp"
#include "bjorner/poly.hpp"
#include "bjorner/scalar.hpp"
#include "bjorner/tnn.hpp"
