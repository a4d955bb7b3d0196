#pragma once

#include "focal/bounds.hpp"
#include "focal/code.hpp"
#include "focal/error.hpp"
#include "focal/experiment.hpp"
#include "focal/fx_optimizer.hpp"
#include "focal/measures.hpp"
#include "focal/oracle.hpp"
#include "focal/pmf.hpp"
#include "focal/source_spec.hpp"
#include "focal/spectrum.hpp"
