#ifndef CYCOVER_JSON_IO_HPP
#define CYCOVER_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "cycover/lattice.hpp"
#include "cycover/zariski.hpp"

namespace cycover {

// Key order is part of the wire format (byte-identical round-trips), so
// everything is built on ordered_json. Rationals travel as canonical
// strings "p/q" (or "p"), never as floats.
using Json = nlohmann::ordered_json;

Json lattice_to_json(const Lattice& l);
// Expects {"labels": [...], "gram": [[...]]}. Throws ParseError on shape
// problems; construction errors (NonSymmetric, ...) propagate.
Lattice lattice_from_json(const Json& j);

Json divisor_class_to_json(const DivisorClass& c);
// Expects {"coeffs": [...]}.
DivisorClass divisor_class_from_json(const Json& j);

// Expects {"lattice": {...}, "primes": [class...], "class": {...}} plus an
// optional "names" array; returns the system and the class to decompose.
std::pair<PrimeSystem, DivisorClass> zariski_input_from_json(const Json& j);

// Canonical serialization used everywhere: two-space indent, one trailing
// newline. Parsing this and re-dumping must reproduce the bytes.
std::string dump_canonical(const Json& j);

Json load_json_file(const std::string& path);  // ParseError on bad file/JSON

}  // namespace cycover

#endif
