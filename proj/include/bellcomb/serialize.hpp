#pragma once

// JSON forms used by the CLI.
//
//   SetPartition    [[2],[4,5],[6,8,9],[7]]
//   RGS / Word      [1,1,2,3,2,1,4,4,2]
//   BellPolynomial  [{"exponents":[[1,3]],"coefficient":"1"}, ...]   (term print order)
//   BigInt          decimal string

#include "bellcomb/bellpoly.hpp"
#include "bellcomb/partitions.hpp"
#include "bellcomb/verify.hpp"

#include <json.hpp>

namespace bellcomb {

nlohmann::json to_json(const SetPartition& p);
SetPartition partition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Rgs& w);
Rgs rgs_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BellPolynomial& p);
BellPolynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationReport& r);

} // namespace bellcomb
