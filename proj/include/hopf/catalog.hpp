#pragma once

// Bundled graded dimensions of the algebras in the s- and d-tables, and the
// tables themselves.

#include "hopf/ratseries.hpp"

#include <string>
#include <vector>

namespace hopf::catalog {

inline constexpr std::size_t kTableOrder = 8;

struct AlgebraCatalogEntry {
    std::string name;
    std::vector<long long> r_coeffs;  // n = 1..8
    std::string source;
    bool reconstructed = false;  // r obtained from a published s-row, not from a closed form
};

/// Table rows in display order.
const std::vector<AlgebraCatalogEntry>& entries();
const AlgebraCatalogEntry& find(const std::string& name);  // throws DomainError

/// Published s- and d-rows, verbatim.
struct PublishedRow {
    std::string name;
    std::vector<long long> values;
};
const std::vector<PublishedRow>& published_s_rows();
const std::vector<PublishedRow>& published_d_rows();

series::SeriesProfile r_profile(const AlgebraCatalogEntry& e);

enum class Table { S, D };

/// Computed rows for every catalog entry, n = 1..max_n.
std::vector<PublishedRow> compute_table(Table which, std::size_t max_n = kTableOrder);

/// "name,n1,...,nK" header followed by one line per row; lines end in '\n'.
std::string to_csv(const std::vector<PublishedRow>& rows, std::size_t max_n);

}  // namespace hopf::catalog
