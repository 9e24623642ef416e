#pragma once

// JSON reading and writing for fields, scalars, algebras, symbolic payloads
// and Brauer descriptors. Scalars are written as strings ("-3/7") and read
// from strings or integers.
//
// Algebra documents are either explicit
//   {"field": {"kind": "Q"} | {"kind": "Fp", "p": 7}, "dim": d,
//    "unit": [...], "mul": [[[c_ij1, ..., c_ijd], ...], ...], "labels": [...]}
// or a constructor
//   {"construct": "mat", "n": 2}            {"construct": "quaternion", "a": -1, "b": -1}
//   {"construct": "product", "of": [...]}   {"construct": "tensor", "of": [...]}
//   {"construct": "dual_numbers"}           {"construct": "field"}
//   {"construct": "opposite", "of": {...}}
//   {"construct": "clifford", "coeffs": [1, 1, 1], "even": true}
// A symbolic payload is {"symbolic": "A", "degree": 3, "hh0_dim": 1,
// "brauer": "unknown" | "trivial" | {"ramified": [2, "inf"]} | {"quaternion": [a, b]}}.

#include <json.hpp>

#include "ncinv/brauer.hpp"
#include "ncinv/motive.hpp"

namespace ncinv {

using Json = nlohmann::ordered_json;

Json parse_json_text(std::string_view text);

FieldSpec parse_field_json(const Json& j);
Json field_json(const FieldSpec& spec);

/// The field an algebra document declares, or fallback if it declares none.
/// FieldMismatch if a nested document disagrees.
FieldSpec document_field(const Json& doc, const FieldSpec& fallback);

template <class F>
typename F::Element parse_scalar(const F& field, const Json& j);

template <class F>
Algebra<F> parse_algebra(const F& field, const Json& doc);

template <class F>
Json algebra_json(const Algebra<F>& a);

template <class F>
Json scalars_json(const F& field, const Vector<F>& v);

BrauerDescriptor parse_brauer_json(const Json& j);
Json brauer_json(const BrauerDescriptor& d);
Json decision_json(Decision d);

template <class F>
Payload<F> parse_payload(const F& field, const Json& doc);

template <class F>
Json summand_json(const Summand<F>& s);

template <class F>
Json motive_json(const MotiveExpression<F>& e);

}  // namespace ncinv
