#include "sphcap/pointset_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sphcap/errors.hpp"
#include "sphcap/json_writer.hpp"

namespace sphcap {

namespace {

bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void save_json(const PointSet& p, std::ostream& out) {
    JsonWriter w(out);
    w.begin_object();
    w.key("d").value(p.dim());
    w.key("n").value(p.n());
    if (!p.label().empty()) w.key("label").value(p.label());
    w.key("points").begin_array();
    for (const SpherePoint& pt : p.points()) {
        w.begin_array();
        for (double c : pt.coords()) w.value(c);
        w.end_array();
    }
    w.end_array();
    w.end_object();
    out << '\n';
}

void save_csv(const PointSet& p, std::ostream& out) {
    for (const SpherePoint& pt : p.points()) {
        const auto& c = pt.coords();
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out << ',';
            out << format_double17(c[i]);
        }
        out << '\n';
    }
}

PointSet load_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("point set JSON: parse failure: ") + e.what());
    }
    if (!j.is_object() || !j.contains("d") || !j.contains("points"))
        throw DomainError("point set JSON: expected an object with \"d\" and \"points\"");
    if (!j["d"].is_number_integer())
        throw DomainError("point set JSON: \"d\" must be an integer");
    const int d = j["d"].get<int>();
    if (!j["points"].is_array())
        throw DomainError("point set JSON: \"points\" must be an array");
    std::vector<SpherePoint> pts;
    pts.reserve(j["points"].size());
    for (const auto& row : j["points"]) {
        if (!row.is_array() || static_cast<int>(row.size()) != d + 1)
            throw DomainError("point set JSON: each point needs exactly d+1 coordinates");
        std::vector<double> coords;
        coords.reserve(row.size());
        for (const auto& c : row) {
            if (!c.is_number())
                throw DomainError("point set JSON: non-numeric coordinate");
            coords.push_back(c.get<double>());
        }
        pts.emplace_back(std::move(coords));
    }
    if (j.contains("n") && j["n"].is_number_integer() &&
        j["n"].get<std::size_t>() != pts.size())
        throw DomainError("point set JSON: \"n\" does not match the number of points");
    std::string label;
    if (j.contains("label") && j["label"].is_string()) label = j["label"].get<std::string>();
    return PointSet(d, std::move(pts), std::move(label));
}

PointSet load_csv(std::istream& in) {
    std::vector<SpherePoint> pts;
    std::string line;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> coords;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            try {
                std::size_t pos = 0;
                const double v = std::stod(cell, &pos);
                coords.push_back(v);
            } catch (const std::exception&) {
                throw DomainError("point set CSV: cannot parse value '" + cell + "'");
            }
        }
        if (coords.size() < 2)
            throw DomainError("point set CSV: rows need at least 2 columns");
        if (width == 0)
            width = coords.size();
        else if (coords.size() != width)
            throw DomainError("point set CSV: inconsistent column counts");
        pts.emplace_back(std::move(coords));
    }
    if (pts.empty()) throw DomainError("point set CSV: no rows");
    return PointSet(static_cast<int>(width) - 1, std::move(pts));
}

}  // namespace

void save_point_set(const PointSet& p, std::ostream& out, PointSetFormat format) {
    if (format == PointSetFormat::Json)
        save_json(p, out);
    else
        save_csv(p, out);
}

PointSet load_point_set(std::istream& in, PointSetFormat format) {
    return format == PointSetFormat::Json ? load_json(in) : load_csv(in);
}

void save_point_set_file(const PointSet& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot open '" + path + "' for writing");
    save_point_set(p, out, has_suffix(path, ".csv") ? PointSetFormat::Csv : PointSetFormat::Json);
}

PointSet load_point_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open point set file '" + path + "'");
    return load_point_set(in, has_suffix(path, ".csv") ? PointSetFormat::Csv : PointSetFormat::Json);
}

}  // namespace sphcap
