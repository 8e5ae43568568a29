#pragma once

#include <string>
#include <vector>

#include "permstat/permutation.hpp"

inline permstat::Permutation P(const std::string& text) { return permstat::parse_permutation(text); }

inline std::vector<int> W(const permstat::Permutation& p) { return {p.word().begin(), p.word().end()}; }
