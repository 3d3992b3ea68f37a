#pragma once

#include "subordlab/admissibility.hpp"
#include "subordlab/bounds.hpp"
#include "subordlab/corpus.hpp"
#include "subordlab/errors.hpp"
#include "subordlab/power_series.hpp"
#include "subordlab/psi.hpp"
#include "subordlab/region.hpp"
#include "subordlab/root_finding.hpp"
#include "subordlab/schwarz.hpp"
#include "subordlab/subordination.hpp"
#include "subordlab/theorems.hpp"
