#include "msm/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <utility>

namespace msm {

namespace {

const Json& require_field(const Json& j, const char* name, const std::string& where) {
    if (!j.is_object()) throw ValidationError(where + " must be a JSON object");
    auto it = j.find(name);
    if (it == j.end()) throw ValidationError(where + "." + name + " is missing");
    return *it;
}

double require_number(const Json& j, const std::string& where) {
    if (!j.is_number()) throw ValidationError(where + " must be a number");
    return j.get<double>();
}

std::int64_t require_integer(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ValidationError(where + " must be an integer");
    return j.get<std::int64_t>();
}

std::string require_string(const Json& j, const std::string& where) {
    if (!j.is_string()) throw ValidationError(where + " must be a string");
    return j.get<std::string>();
}

const Json& require_array(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ValidationError(where + " must be an array");
    return j;
}

std::vector<std::vector<double>> parse_matrix_rows(const Json& j, const std::string& where) {
    require_array(j, where);
    std::vector<std::vector<double>> rows;
    rows.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string row_where = where + "[" + std::to_string(i) + "]";
        require_array(j[i], row_where);
        std::vector<double> row;
        row.reserve(j[i].size());
        for (std::size_t k = 0; k < j[i].size(); ++k) {
            row.push_back(require_number(j[i][k], row_where + "[" + std::to_string(k) + "]"));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

Element parse_element(const Json& j, const std::string& where) {
    if (j.is_string()) return Element(j.get<std::string>());
    if (j.is_array()) {
        Element::Coords coords;
        coords.reserve(j.size());
        for (std::size_t i = 0; i < j.size(); ++i) {
            coords.push_back(require_number(j[i], where + "[" + std::to_string(i) + "]"));
        }
        try {
            return Element(std::move(coords));
        } catch (const ValidationError& e) {
            throw ValidationError(where + ": " + e.what());
        }
    }
    throw ValidationError(where + " must be a coordinate array or a label string");
}

GroundSpacePtr parse_space(const Json& j) {
    const std::string kind = require_string(require_field(j, "kind", "space"), "space.kind");
    try {
        if (kind == "euclidean" || kind == "l1") {
            const std::int64_t dimension =
                require_integer(require_field(j, "dimension", "space"), "space.dimension");
            if (dimension < 1) throw ValidationError("space.dimension must be positive");
            Element basepoint =
                parse_element(require_field(j, "basepoint", "space"), "space.basepoint");
            return kind == "euclidean"
                       ? GroundSpace::euclidean(static_cast<std::size_t>(dimension),
                                                std::move(basepoint))
                       : GroundSpace::l1(static_cast<std::size_t>(dimension), std::move(basepoint));
        }
        if (kind == "discrete") {
            return GroundSpace::discrete(
                parse_element(require_field(j, "basepoint", "space"), "space.basepoint"));
        }
        if (kind == "finite_matrix") {
            auto matrix = parse_matrix_rows(require_field(j, "matrix", "space"), "space.matrix");
            const Json& labels_json = require_array(require_field(j, "labels", "space"), "space.labels");
            std::vector<std::string> labels;
            labels.reserve(labels_json.size());
            for (std::size_t i = 0; i < labels_json.size(); ++i) {
                labels.push_back(
                    require_string(labels_json[i], "space.labels[" + std::to_string(i) + "]"));
            }
            Element basepoint =
                parse_element(require_field(j, "basepoint", "space"), "space.basepoint");
            return GroundSpace::finite_matrix(std::move(matrix), std::move(labels),
                                              std::move(basepoint));
        }
    } catch (const ValidationError& e) {
        const std::string message = e.what();
        if (message.rfind("space.", 0) == 0) throw;  // already has field context
        throw ValidationError("space: " + message);
    }
    throw ValidationError("space.kind \"" + kind +
                          "\" is not one of euclidean, l1, discrete, finite_matrix");
}

Multiset parse_multiset(const Json& j, GroundSpacePtr space) {
    const Json& entries_json = require_array(require_field(j, "entries", "multiset"), "multiset.entries");
    std::vector<Multiset::Entry> entries;
    entries.reserve(entries_json.size());
    for (std::size_t i = 0; i < entries_json.size(); ++i) {
        const std::string where = "multiset.entries[" + std::to_string(i) + "]";
        const Json& entry = entries_json[i];
        Element element = parse_element(require_field(entry, "element", where), where + ".element");
        const std::int64_t multiplicity =
            require_integer(require_field(entry, "multiplicity", where), where + ".multiplicity");
        if (multiplicity < 0) throw ValidationError(where + ".multiplicity must be nonnegative");
        entries.emplace_back(std::move(element), multiplicity);
    }
    try {
        return Multiset::canonicalize(std::move(space), entries);
    } catch (const ValidationError& e) {
        throw ValidationError("multiset: " + std::string(e.what()));
    }
}

SignedMultiset parse_signed_multiset(const Json& j, GroundSpacePtr space) {
    const Json& entries_json =
        require_array(require_field(j, "entries", "signed multiset"), "signed multiset.entries");
    std::vector<SignedMultiset::Entry> entries;
    entries.reserve(entries_json.size());
    for (std::size_t i = 0; i < entries_json.size(); ++i) {
        const std::string where = "entries[" + std::to_string(i) + "]";
        const Json& entry = entries_json[i];
        Element element = parse_element(require_field(entry, "element", where), where + ".element");
        const std::int64_t coefficient =
            require_integer(require_field(entry, "coefficient", where), where + ".coefficient");
        if (coefficient == 0) throw ValidationError(where + ".coefficient must be nonzero");
        entries.emplace_back(std::move(element), coefficient);
    }
    try {
        return SignedMultiset::canonicalize(std::move(space), entries);
    } catch (const ValidationError& e) {
        throw ValidationError("signed multiset: " + std::string(e.what()));
    }
}

TruncatedL1Multiset parse_l1_multiset(const Json& j, GroundSpacePtr space) {
    Multiset head = parse_multiset(require_field(j, "head", "l1 multiset"), std::move(space));
    const double tail_mass =
        require_number(require_field(j, "tail_mass", "l1 multiset"), "l1 multiset.tail_mass");
    try {
        return TruncatedL1Multiset(std::move(head), tail_mass);
    } catch (const ValidationError& e) {
        throw ValidationError("l1 multiset: " + std::string(e.what()));
    }
}

QuotientSpace parse_quotient_space(const Json& j) {
    GroundSpacePtr base = parse_space(require_field(j, "space", "quotient"));
    const Json& subset_json = require_array(require_field(j, "H", "quotient"), "quotient.H");
    std::vector<Element> subset;
    subset.reserve(subset_json.size());
    for (std::size_t i = 0; i < subset_json.size(); ++i) {
        subset.push_back(parse_element(subset_json[i], "quotient.H[" + std::to_string(i) + "]"));
    }
    try {
        return QuotientSpace(std::move(base), std::move(subset));
    } catch (const ValidationError& e) {
        throw ValidationError("quotient.H: " + std::string(e.what()));
    }
}

CostMatrix parse_cost_matrix(const Json& j) {
    const Json& rows_json = j.is_object() ? require_field(j, "matrix", "input") : j;
    auto rows = parse_matrix_rows(rows_json, "matrix");
    try {
        return CostMatrix(rows);
    } catch (const ValidationError& e) {
        throw ValidationError("matrix: " + std::string(e.what()));
    }
}

Json to_json(const Element& e) {
    if (e.is_label()) return Json(e.label());
    Json coords = Json::array();
    for (const double c : e.coords()) coords.push_back(c);
    return coords;
}

Json to_json(const GroundSpace& space) {
    Json j = Json::object();
    j["kind"] = to_string(space.kind());
    switch (space.kind()) {
        case MetricKind::Euclidean:
        case MetricKind::L1:
            j["dimension"] = space.dimension();
            break;
        case MetricKind::Discrete:
            break;
        case MetricKind::FiniteMatrix:
            j["matrix"] = space.matrix();
            j["labels"] = space.labels();
            break;
    }
    j["basepoint"] = to_json(space.basepoint());
    return j;
}

Json to_json(const Multiset& a) {
    Json entries = Json::array();
    for (const auto& [element, multiplicity] : a.entries()) {
        entries.push_back(Json{{"element", to_json(element)}, {"multiplicity", multiplicity}});
    }
    return Json{{"entries", std::move(entries)}};
}

Json to_json(const SignedMultiset& x) {
    Json entries = Json::array();
    for (const auto& [element, coefficient] : x.entries()) {
        entries.push_back(Json{{"element", to_json(element)}, {"coefficient", coefficient}});
    }
    return Json{{"entries", std::move(entries)}};
}

Json to_json(const TruncatedL1Multiset& a) {
    return Json{{"head", to_json(a.head())}, {"tail_mass", a.tail_mass()}};
}

Json to_json(const QuotientSpace& qs) {
    Json subset = Json::array();
    for (const Element& x : qs.collapsed_subset()) subset.push_back(to_json(x));
    return Json{{"space", to_json(*qs.base())}, {"H", std::move(subset)}};
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError(path + ": cannot open file");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

}  // namespace msm
