#pragma once

#include <cstdint>
#include <map>

#include "cyclotome/quiver.hpp"

namespace cyclotome {

// Dimension of the degree-beta part of the free algebra on E_1..E_n modulo the
// quantum Serre relations, computed as #words - rank over Q(t).
std::int64_t serre_quotient_dim(const Quiver& q, const DimensionVector& beta);

// Every nonzero multidegree of total degree <= maxdeg. Throws DegreeTooLarge above cap.
std::map<DimensionVector, std::int64_t> serre_quotient_dims(const Quiver& q, int maxdeg, int cap = 6);

}  // namespace cyclotome
