#pragma once

#include "ptf/audit.hpp"
#include "ptf/bent.hpp"
#include "ptf/boolfn.hpp"
#include "ptf/decompose.hpp"
#include "ptf/exactint.hpp"
#include "ptf/json_io.hpp"
#include "ptf/lp.hpp"
#include "ptf/modular.hpp"
#include "ptf/ptf.hpp"
#include "ptf/sparse.hpp"
#include "ptf/synth.hpp"
#include "ptf/verify.hpp"
