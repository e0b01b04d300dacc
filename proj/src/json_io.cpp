#include "polyidp/json_io.hpp"

#include <fstream>
#include <sstream>

#include "polyidp/errors.hpp"

namespace polyidp {

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const Partition& p, std::size_t n) { return Json(p.padded(n).coords); }

Json to_json(const LatticePoint& p) { return Json(p.coords); }

Json to_json(const Tableau& t) {
    Json j = Json::object();
    j["shape"] = to_json(t.shape());
    j["rows"] = t.rows();
    return j;
}

Json to_json(const SchurSum& s) {
    Json j = Json::object();
    j["n"] = s.ambient;
    j["generators"] = partitions_to_json(s.generators, s.ambient);
    return j;
}

Json points_to_json(const std::vector<LatticePoint>& pts) {
    Json j = Json::array();
    for (const auto& p : pts) j.push_back(to_json(p));
    return j;
}

Json partitions_to_json(const std::vector<Partition>& ps, std::size_t n) {
    Json j = Json::array();
    for (const auto& p : ps) j.push_back(to_json(p, n));
    return j;
}

namespace {

std::vector<int> int_array(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of integers");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError(std::string(what) + ": expected integer entries");
        const auto x = v.get<long long>();
        if (x < 0 || x > 1'000'000) throw ParseError(std::string(what) + ": entry out of range");
        out.push_back(static_cast<int>(x));
    }
    return out;
}

} // namespace

Partition parse_partition(const Json& j) { return Partition(int_array(j, "partition")); }

LatticePoint parse_point(const Json& j) { return LatticePoint(int_array(j, "point")); }

std::vector<Partition> parse_partition_list(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of partitions");
    std::vector<Partition> out;
    for (const auto& p : j) out.push_back(parse_partition(p));
    return out;
}

Tableau parse_tableau(const Json& j) {
    if (!j.is_object() || !j.contains("rows")) throw ParseError("tableau: expected an object with \"rows\"");
    const Json& rows = j.at("rows");
    if (!rows.is_array()) throw ParseError("tableau: \"rows\" must be an array");
    std::vector<std::vector<int>> r;
    for (const auto& row : rows) {
        if (!row.is_array()) throw ParseError("tableau: each row must be an array");
        std::vector<int> vals;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw ParseError("tableau: entries must be integers");
            vals.push_back(v.get<int>());
        }
        r.push_back(std::move(vals));
    }
    if (j.contains("shape")) return Tableau(parse_partition(j.at("shape")), std::move(r));
    return Tableau(std::move(r));
}

SchurSum parse_schur_sum(const Json& j) {
    if (!j.is_object() || !j.contains("generators")) throw ParseError("expected an object with \"generators\"");
    auto gens = parse_partition_list(j.at("generators"));
    std::size_t n = 0;
    if (j.contains("n")) {
        if (!j.at("n").is_number_integer() || j.at("n").get<long long>() < 1) throw ParseError("\"n\" must be a positive integer");
        n = j.at("n").get<std::size_t>();
    } else {
        for (const auto& g : j.at("generators")) n = std::max(n, g.size());
    }
    return SchurSum(std::move(gens), n);
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

} // namespace polyidp
