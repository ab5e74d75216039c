#include "cycover/json_io.hpp"

#include <fstream>
#include <sstream>

#include "cycover/error.hpp"

namespace cycover {

namespace {

QVec rational_row_from_json(const Json& j, const char* what) {
    if (!j.is_array())
        throw Error(ErrorCode::ParseError, std::string(what) + " must be an array");
    QVec row;
    for (const auto& entry : j) {
        if (!entry.is_string())
            throw Error(ErrorCode::ParseError,
                        std::string(what) + " entries must be rational strings");
        row.push_back(parse_rational(entry.get<std::string>()));
    }
    return row;
}

Json rational_row_to_json(const QVec& row) {
    Json j = Json::array();
    for (const auto& q : row) j.push_back(rational_to_string(q));
    return j;
}

}  // namespace

Json lattice_to_json(const Lattice& l) {
    Json j;
    j["labels"] = l.labels;
    Json gram = Json::array();
    for (const auto& row : l.gram) gram.push_back(rational_row_to_json(row));
    j["gram"] = gram;
    return j;
}

Lattice lattice_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("labels") || !j.contains("gram"))
        throw Error(ErrorCode::ParseError, "lattice JSON needs \"labels\" and \"gram\"");
    if (!j["labels"].is_array())
        throw Error(ErrorCode::ParseError, "\"labels\" must be an array of strings");
    std::vector<std::string> labels;
    for (const auto& lbl : j["labels"]) {
        if (!lbl.is_string())
            throw Error(ErrorCode::ParseError, "\"labels\" must be an array of strings");
        labels.push_back(lbl.get<std::string>());
    }
    if (!j["gram"].is_array())
        throw Error(ErrorCode::ParseError, "\"gram\" must be an array of rows");
    QMat gram;
    for (const auto& row : j["gram"]) gram.push_back(rational_row_from_json(row, "gram row"));
    return lattice_from_gram(std::move(gram), std::move(labels));
}

Json divisor_class_to_json(const DivisorClass& c) {
    Json j;
    j["coeffs"] = rational_row_to_json(c.coeffs);
    return j;
}

DivisorClass divisor_class_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("coeffs"))
        throw Error(ErrorCode::ParseError, "divisor class JSON needs \"coeffs\"");
    return DivisorClass{rational_row_from_json(j["coeffs"], "coeffs")};
}

std::pair<PrimeSystem, DivisorClass> zariski_input_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("lattice") || !j.contains("primes") || !j.contains("class"))
        throw Error(ErrorCode::ParseError,
                    "zariski input needs \"lattice\", \"primes\" and \"class\"");
    PrimeSystem s;
    s.ambient = lattice_from_json(j["lattice"]);
    if (!j["primes"].is_array())
        throw Error(ErrorCode::ParseError, "\"primes\" must be an array of divisor classes");
    for (const auto& p : j["primes"]) s.primes.push_back(divisor_class_from_json(p));
    if (j.contains("names")) {
        if (!j["names"].is_array())
            throw Error(ErrorCode::ParseError, "\"names\" must be an array of strings");
        for (const auto& nm : j["names"]) {
            if (!nm.is_string())
                throw Error(ErrorCode::ParseError, "\"names\" must be an array of strings");
            s.names.push_back(nm.get<std::string>());
        }
    }
    if (s.names.empty())
        for (std::size_t i = 0; i < s.primes.size(); ++i)
            s.names.push_back("D" + std::to_string(i));
    DivisorClass d = divisor_class_from_json(j["class"]);
    return {std::move(s), std::move(d)};
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::ParseError, "cannot open file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, "invalid JSON in '" + path + "': " + e.what());
    }
}

}  // namespace cycover
