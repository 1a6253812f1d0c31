#pragma once

// Umbrella header.

#include "altlab/campaign.hpp"
#include "altlab/functions.hpp"
#include "altlab/inequalities.hpp"
#include "altlab/matrix.hpp"
#include "altlab/matrix_io.hpp"
#include "altlab/norms.hpp"
#include "altlab/probe.hpp"
#include "altlab/report_io.hpp"
#include "altlab/sampling.hpp"
#include "altlab/spectral.hpp"
