#include "vrkit_cli/json_io.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

namespace vrkit::cli {

json complex_to_json(cx z) { return json::array({z.real(), z.imag()}); }

cx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("expected [re, im] pair in JSON");
    return cx{j[0].get<double>(), j[1].get<double>()};
}

json region_to_json(const region_spec& spec) {
    json j;
    j["schema"] = "vrkit/1";
    j["type"] = "region";
    j["kind"] = spec.kind;
    j["z0"] = complex_to_json(spec.z0);
    if (spec.kind == "VT") j["tau"] = spec.tau;
    j["degenerate"] = spec.degenerate;
    j["point_region"] = spec.point_region;

    json edges = json::array();
    for (const auto& e : spec.edges) {
        json pts = json::array();
        for (cx p : e.points) pts.push_back(complex_to_json(p));
        edges.push_back({{"name", e.name}, {"included", e.included}, {"points", pts}});
    }
    j["edges"] = edges;

    json excl = json::array();
    for (cx p : spec.excluded_points) excl.push_back(complex_to_json(p));
    j["excluded_points"] = excl;

    if (spec.degenerate && !spec.point_region)
        j["interval"] = {{"a", complex_to_json(spec.interval_a)},
                         {"b", complex_to_json(spec.interval_b)},
                         {"a_included", spec.a_included},
                         {"b_included", spec.b_included}};
    return j;
}

region_spec region_from_json(const json& j) {
    if (j.value("type", "") != "region")
        throw std::invalid_argument("JSON document is not a region");
    region_spec spec;
    spec.kind = j.at("kind").get<std::string>();
    spec.z0 = complex_from_json(j.at("z0"));
    if (j.contains("tau")) spec.tau = j["tau"].get<double>();
    spec.degenerate = j.at("degenerate").get<bool>();
    spec.point_region = j.at("point_region").get<bool>();
    for (const auto& e : j.at("edges")) {
        region_edge edge;
        edge.name = e.at("name").get<std::string>();
        edge.included = e.at("included").get<bool>();
        for (const auto& p : e.at("points")) edge.points.push_back(complex_from_json(p));
        spec.edges.push_back(std::move(edge));
    }
    for (const auto& p : j.at("excluded_points")) spec.excluded_points.push_back(complex_from_json(p));
    if (j.contains("interval")) {
        const auto& iv = j["interval"];
        spec.interval_a = complex_from_json(iv.at("a"));
        spec.interval_b = complex_from_json(iv.at("b"));
        spec.a_included = iv.at("a_included").get<bool>();
        spec.b_included = iv.at("b_included").get<bool>();
    }
    return spec;
}

json driving_to_json(const driving_spec& driving) {
    json j;
    switch (driving.kind) {
        case driving_spec::kind_t::slit: {
            j["kind"] = "slit";
            json pieces = json::array();
            for (const auto& p : driving.slit_pieces)
                pieces.push_back({{"t_start", p.t_start},
                                  {"t_end", p.t_end},
                                  {"value_start", p.value_start},
                                  {"value_end", p.value_end}});
            j["pieces"] = pieces;
            break;
        }
        case driving_spec::kind_t::measure_path: {
            j["kind"] = "measure_path";
            json pieces = json::array();
            for (const auto& p : driving.measure_pieces) {
                json atoms = json::array();
                for (const auto& a : p.measure.atoms)
                    atoms.push_back(json::array({a.position, a.weight}));
                pieces.push_back(
                    {{"t_start", p.t_start}, {"t_end", p.t_end}, {"atoms", atoms}});
            }
            j["pieces"] = pieces;
            break;
        }
        case driving_spec::kind_t::exponent:
            j["kind"] = "exponent";
            j["x"] = driving.exponent_x;
            j["anchor"] = complex_to_json(driving.anchor);
            break;
    }
    return j;
}

driving_spec driving_from_json(const json& j) {
    driving_spec d;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "slit") {
        d.kind = driving_spec::kind_t::slit;
        for (const auto& p : j.at("pieces")) {
            slit_piece piece;
            piece.t_start = p.at("t_start").get<double>();
            piece.t_end = p.at("t_end").get<double>();
            piece.value_start = p.at("value_start").get<double>();
            piece.value_end = p.at("value_end").get<double>();
            d.slit_pieces.push_back(piece);
        }
    } else if (kind == "measure_path") {
        d.kind = driving_spec::kind_t::measure_path;
        for (const auto& p : j.at("pieces")) {
            measure_piece piece;
            piece.t_start = p.at("t_start").get<double>();
            piece.t_end = p.at("t_end").get<double>();
            for (const auto& a : p.at("atoms"))
                piece.measure.atoms.push_back({a[0].get<double>(), a[1].get<double>()});
            d.measure_pieces.push_back(piece);
        }
    } else if (kind == "exponent") {
        d.kind = driving_spec::kind_t::exponent;
        d.exponent_x = j.at("x").get<double>();
        d.anchor = complex_from_json(j.at("anchor"));
    } else {
        throw std::invalid_argument("unknown driving kind '" + kind + "'");
    }
    d.validate();
    return d;
}

json trajectory_to_json(const trajectory& traj) {
    json j;
    j["schema"] = "vrkit/1";
    j["type"] = "trajectory";
    j["z0"] = complex_to_json(traj.z0);
    json samples = json::array();
    for (const auto& s : traj.samples)
        samples.push_back(json::array({s.t, s.w.real(), s.w.imag()}));
    j["samples"] = samples;
    j["driving"] = driving_to_json(traj.driving);
    return j;
}

trajectory trajectory_from_json(const json& j) {
    if (j.value("type", "") != "trajectory")
        throw std::invalid_argument("JSON document is not a trajectory");
    trajectory traj;
    traj.z0 = complex_from_json(j.at("z0"));
    traj.driving = driving_from_json(j.at("driving"));
    for (const auto& s : j.at("samples")) {
        if (!s.is_array() || s.size() != 3)
            throw std::invalid_argument("trajectory sample must be [t, re, im]");
        traj.samples.push_back({s[0].get<double>(), cx{s[1].get<double>(), s[2].get<double>()}});
    }
    return traj;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

void write_text(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    out << content;
    if (!out) throw std::runtime_error("failed writing to '" + path + "'");
}

json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

}  // namespace vrkit::cli
