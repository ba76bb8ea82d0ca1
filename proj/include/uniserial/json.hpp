#pragma once

#include <json.hpp>

#include "uniserial/classify.hpp"
#include "uniserial/constructions.hpp"
#include "uniserial/errors.hpp"
#include "uniserial/lie.hpp"
#include "uniserial/matrix.hpp"
#include "uniserial/rational.hpp"
#include "uniserial/sl2.hpp"

// JSON wire formats. All scalars are exact "p/q" strings, never floats.

// mpq_class lives outside any namespace we control, so it gets a serializer
// specialization instead of ADL hooks.
namespace nlohmann {
template <>
struct adl_serializer<mpq_class> {
    static void to_json(json& j, const mpq_class& x) { j = uniserial::to_string(x); }
    static void from_json(const json& j, mpq_class& x) {
        if (!j.is_string())
            throw uniserial::InputError("rational must be a string \"p/q\"");
        x = uniserial::parse_rational(j.get<std::string>());
    }
};
} // namespace nlohmann

namespace uniserial {

using nlohmann::json;

namespace detail {

inline const json& require_field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end())
        throw InputError(std::string("missing field '") + key + "'");
    return *it;
}

inline int int_field(const json& j, const char* key) {
    const json& v = require_field(j, key);
    if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

inline Rational rational_field(const json& j, const char* key) {
    const json& v = require_field(j, key);
    if (!v.is_string()) throw InputError(std::string("field '") + key + "' must be a rational string");
    return parse_rational(v.get<std::string>());
}

} // namespace detail

inline void to_json(json& j, const Matrix& m) {
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(to_string(m(i, c)));
        entries.push_back(std::move(row));
    }
    j = json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline void from_json(const json& j, Matrix& m) {
    int rows = detail::int_field(j, "rows");
    int cols = detail::int_field(j, "cols");
    const json& entries = detail::require_field(j, "entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
        throw InputError("matrix entries must be an array of 'rows' rows");
    m = Matrix(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = entries[i];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw InputError("matrix row has wrong length");
        for (int c = 0; c < cols; ++c) {
            if (!row[c].is_string()) throw InputError("matrix entries must be rational strings");
            m(i, c) = parse_rational(row[c].get<std::string>());
        }
    }
}

inline void to_json(json& j, const JordanBlock& b) {
    j = json{{"eigenvalue", to_string(b.eigenvalue)}, {"size", b.size}};
}

inline void from_json(const json& j, JordanBlock& b) {
    b.eigenvalue = detail::rational_field(j, "eigenvalue");
    b.size = detail::int_field(j, "size");
}

inline void to_json(json& j, const JordanSpec& s) { j = s.blocks; }

inline void from_json(const json& j, JordanSpec& s) {
    if (!j.is_array()) throw InputError("Jordan specification must be an array of blocks");
    s.blocks = j.get<std::vector<JordanBlock>>();
    s.validate();
}

inline void to_json(json& j, const Representation& rep) {
    j = json{{"spec", rep.algebra.spec},
             {"d", rep.d},
             {"A", rep.a},
             {"generators", rep.generators}};
}

inline void from_json(const json& j, Representation& rep) {
    JordanSpec spec = detail::require_field(j, "spec").get<JordanSpec>();
    rep.algebra = build_algebra(spec);
    rep.d = detail::int_field(j, "d");
    rep.a = detail::require_field(j, "A").get<Matrix>();
    rep.generators = detail::require_field(j, "generators").get<std::vector<Matrix>>();
    rep.validate_shape();
}

inline void to_json(json& j, const RelationViolation& v) {
    j = json{{"relation", v.relation}, {"indices", v.indices}, {"residual", v.residual}};
}

inline void to_json(json& j, const ClassLabel& label) {
    j = json{{"variant", label_kind_name(label.kind)},
             {"alpha", to_string(label.alpha)},
             {"lambda", to_string(label.lambda)}};
    switch (label.kind) {
        case LabelKind::KX:
            j["n"] = label.n;
            j["k"] = label.k;
            j["X"] = label.x_block;
            break;
        case LabelKind::TOP:
        case LabelKind::BOTTOM:
            j["n"] = label.n;
            break;
        case LabelKind::AA: {
            j["n"] = label.n;
            json a = json::array();
            for (const auto& x : label.a) a.push_back(to_string(x));
            j["a"] = std::move(a);
            break;
        }
        case LabelKind::DIAG:
            j["ell"] = label.ell;
            break;
    }
}

inline void from_json(const json& j, ClassLabel& label) {
    const json& variant = detail::require_field(j, "variant");
    if (!variant.is_string()) throw InputError("label variant must be a string");
    std::string v = variant.get<std::string>();
    label = ClassLabel{};
    label.alpha = detail::rational_field(j, "alpha");
    label.lambda = detail::rational_field(j, "lambda");
    if (v == "KX") {
        label.kind = LabelKind::KX;
        label.n = detail::int_field(j, "n");
        label.k = detail::int_field(j, "k");
        label.x_block = detail::require_field(j, "X").get<Matrix>();
    } else if (v == "TOP" || v == "BOTTOM") {
        label.kind = (v == "TOP") ? LabelKind::TOP : LabelKind::BOTTOM;
        label.n = detail::int_field(j, "n");
    } else if (v == "AA") {
        label.kind = LabelKind::AA;
        label.n = detail::int_field(j, "n");
        label.a = detail::require_field(j, "a").get<std::vector<Rational>>();
    } else if (v == "DIAG") {
        label.kind = LabelKind::DIAG;
        label.ell = detail::int_field(j, "ell");
    } else {
        throw InputError("unknown label variant '" + v + "'");
    }
    label.validate();
}

inline void to_json(json& j, const LowestWeightVector& v) {
    json coeffs = json::array();
    for (const auto& c : v.coefficients) coeffs.push_back(to_string(c));
    j = json{{"index", v.index}, {"coefficients", std::move(coeffs)}, {"matrix", v.matrix}};
}

inline void to_json(json& j, const CgDecomposition& cg) {
    j = json{{"p", cg.p}, {"q", cg.q}, {"exponents", cg.exponents},
             {"generators", cg.generators}};
}

inline void to_json(json& j, const ParameterSlot& s) {
    j = json{{"block", s.block}, {"generator_index", s.generator_index}, {"power", s.power}};
}

inline void to_json(json& j, const ExtensionSpace& space) {
    j = json{{"spec", space.spec},
             {"alpha", to_string(space.alpha)},
             {"k", space.k},
             {"A", space.a},
             {"E0", space.e0},
             {"target_generators", space.target_generators},
             {"target_orders", space.target_orders},
             {"parameter_slots", space.slots}};
}

inline void to_json(json& j, const ExistenceVerdict& v) {
    json reason;
    if (v.case_tag == "refusal") {
        reason = json{{"case", "refusal"}, {"violated", v.violated}};
    } else {
        reason = json{{"case", v.case_tag}, {"conditions", v.checked}, {"n", v.n}};
    }
    j = json{{"exists", v.exists}, {"reason", std::move(reason)}};
}

inline void to_json(json& j, const Classification& c) {
    j = json{{"label", c.label}, {"conjugator", c.conjugator}};
}

// Parameter files for extension builds: an array of slot assignments,
// each {"block", "generator_index", "power", "value"}. Missing slots are 0.
inline ParameterAssignment parameter_assignment_from_json(const json& j) {
    const json* values = &j;
    if (j.is_object()) values = &detail::require_field(j, "values");
    if (!values->is_array()) throw InputError("parameter file must hold an array of slot values");
    ParameterAssignment params;
    for (const auto& item : *values) {
        int block = detail::int_field(item, "block");
        int gen = detail::int_field(item, "generator_index");
        int power = detail::int_field(item, "power");
        Rational value = detail::rational_field(item, "value");
        params[std::make_tuple(block, gen, power)] = value;
    }
    return params;
}

} // namespace uniserial
