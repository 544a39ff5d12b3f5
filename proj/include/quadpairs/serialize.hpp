#pragma once

// JSON encodings of the library's results. Objects keep a fixed key order.
// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.

#include "quadpairs/drops.hpp"
#include "quadpairs/minuscule.hpp"
#include "quadpairs/mt_decision.hpp"
#include "quadpairs/oracle.hpp"

#include <json.hpp>

namespace qp {

using Json = nlohmann::ordered_json;

Json bigint_to_json(const BigInt& x);
BigInt bigint_from_json(const Json& j);

void to_json(Json& j, const CartanType& t);
void from_json(const Json& j, CartanType& t);
void to_json(Json& j, const Weight& w);
void from_json(const Json& j, Weight& w);
void to_json(Json& j, const Field& f);
void from_json(const Json& j, Field& f);

// {type, weight, name, dimension, sign, dual, quadratic, in_classical_table}
// and "orbit" when with_orbit is set. Decoding recomputes the
// representation from type and weight and checks the stored fields.
Json rep_to_json(const MinusculeRep& rep, bool with_orbit = false);
MinusculeRep rep_from_json(const Json& j);

void to_json(Json& j, const DropReport& r);
void from_json(const Json& j, DropReport& r);
void to_json(Json& j, const Candidate& c);
void from_json(const Json& j, Candidate& c);
void to_json(Json& j, const CandidateList& l);
void from_json(const Json& j, CandidateList& l);

void to_json(Json& j, const UnipotenceReport& r);
void from_json(const Json& j, UnipotenceReport& r);
void to_json(Json& j, const TensorTrial& t);
void from_json(const Json& j, TensorTrial& t);
void to_json(Json& j, const TensorLemmaReport& r);
void from_json(const Json& j, TensorLemmaReport& r);
void to_json(Json& j, const RootElementReport& r);
void from_json(const Json& j, RootElementReport& r);

void to_json(Json& j, const PinkResult& r);
void from_json(const Json& j, PinkResult& r);
void to_json(Json& j, const MtQuery& q);
void from_json(const Json& j, MtQuery& q);
void to_json(Json& j, const Witness& w);
void from_json(const Json& j, Witness& w);
void to_json(Json& j, const MtVerdict& v);
void from_json(const Json& j, MtVerdict& v);

// Parses "A", "d", "E6", "D6" (rank embedded) with an optional explicit rank.
CartanType parse_cartan_type(const std::string& family, std::optional<int> rank);

// Canonical 1-based fundamental weight index for a label: w<j>, std,
// spin (B), spin+ / spin- (D), wedge<j> (A). Throws InvalidArgument.
int parse_weight_label(const CartanType& type, const std::string& label);

} // namespace qp
