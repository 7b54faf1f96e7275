#ifndef PERMCOH_PERMCOH_HPP
#define PERMCOH_PERMCOH_HPP

#include "permcoh/coherence.hpp"
#include "permcoh/macros.hpp"
#include "permcoh/oracle.hpp"
#include "permcoh/permutation.hpp"
#include "permcoh/projection.hpp"
#include "permcoh/registry.hpp"
#include "permcoh/script.hpp"
#include "permcoh/semantics.hpp"
#include "permcoh/superz.hpp"
#include "permcoh/term.hpp"

#endif
