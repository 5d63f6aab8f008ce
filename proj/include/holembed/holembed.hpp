#pragma once

// Umbrella header: exact-arithmetic construction of finite-stage
// biorthogonal systems on graded sequence spaces and their coefficient
// embeddings into truncated power series with certified tail bounds.

#include "holembed/errors.hpp"
#include "holembed/rational.hpp"
#include "holembed/rng.hpp"
#include "holembed/sparse.hpp"
#include "holembed/kothe.hpp"
#include "holembed/linalg.hpp"
#include "holembed/weights.hpp"
#include "holembed/biortho.hpp"
#include "holembed/embedding.hpp"
#include "holembed/json_io.hpp"
#include "holembed/suite.hpp"
