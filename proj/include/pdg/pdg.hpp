#pragma once

// Everything: number theory, graph model, closed forms, oracles, reports.

#include "pdg/aut.hpp"
#include "pdg/canon.hpp"
#include "pdg/digraph.hpp"
#include "pdg/errors.hpp"
#include "pdg/numtheory.hpp"
#include "pdg/oracle.hpp"
#include "pdg/report.hpp"
#include "pdg/search.hpp"
#include "pdg/spectral.hpp"
#include "pdg/structure.hpp"
#include "pdg/verify.hpp"
