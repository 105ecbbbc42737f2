#pragma once

#include <vector>

#include "contactlie/catalog.hpp"
#include "contactlie/report.hpp"

namespace contactlie {

/// Golden checks for one entry: Jacobi, flags, stated forms at each sample,
/// excluded samples, claimed (non-)existence, Frobenius data, extension
/// recipes.
std::vector<Record> golden_checks(const CatalogEntry& e);

/// Cross-checks for one entry at each evaluation point: the orthogonal and
/// contact tripwire, every obstruction against the generic polynomials and
/// the entry's claims, and the 5-dimensional case split.
std::vector<Record> cross_checks(const CatalogEntry& e);

/// Both of the above for every entry matching the filter. Entries are
/// processed on up to `threads` workers and merged in catalog order.
Report run_suite(const CatalogFilter& filter = {}, unsigned threads = 0);

} // namespace contactlie
