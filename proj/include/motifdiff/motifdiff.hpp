// motifdiff.hpp — umbrella include.

#pragma once

#include "motifdiff/config.hpp"
#include "motifdiff/diffusion.hpp"
#include "motifdiff/errors.hpp"
#include "motifdiff/graph.hpp"
#include "motifdiff/harness.hpp"
#include "motifdiff/metrics.hpp"
#include "motifdiff/motif.hpp"
#include "motifdiff/report.hpp"
#include "motifdiff/rng.hpp"
#include "motifdiff/temporal.hpp"
#include "motifdiff/version.hpp"
