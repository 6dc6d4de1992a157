#ifndef CBMW_CBMW_HPP_
#define CBMW_CBMW_HPP_

// Umbrella header for the library (the CLI headers live under cbmw/cli).

#include "adm_degenerate.hpp"
#include "adm_nondegenerate.hpp"
#include "cell_datum.hpp"
#include "counting.hpp"
#include "diagrams.hpp"
#include "error.hpp"
#include "field.hpp"
#include "mpoly.hpp"
#include "omega.hpp"
#include "params.hpp"
#include "poly.hpp"
#include "ratfunc.hpp"
#include "rationality.hpp"
#include "report.hpp"
#include "rx_functions.hpp"
#include "sampling.hpp"
#include "semi_adm.hpp"
#include "series.hpp"
#include "symfun.hpp"

#endif  // CBMW_CBMW_HPP_
