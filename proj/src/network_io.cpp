#include "sbcn/network_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sbcn/errors.hpp"

namespace sbcn {

using nlohmann::json;

namespace {

json edges_to_json(const std::vector<Arc>& edges) {
    json arr = json::array();
    for (const auto& [i, j] : edges) arr.push_back(json::array({i, j}));
    return arr;
}

std::vector<std::string> labels_or_default(const Dag& g) {
    std::vector<std::string> labels;
    labels.reserve(g.node_count());
    for (int i = 0; i < g.node_count(); ++i) labels.push_back(g.label(i));
    return labels;
}

Dag dag_from_json(const json& j) {
    try {
        const int k = j.at("k").get<int>();
        std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
        std::vector<Arc> edges;
        for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        return Dag::from_edges(k, edges, std::move(labels));
    } catch (const json::exception& e) {
        throw DataError(std::string("malformed network JSON: ") + e.what());
    } catch (const std::exception& e) {
        throw DataError(std::string("invalid network: ") + e.what());
    }
}

} // namespace

std::string network_to_json(const Dag& g) {
    json j;
    j["k"] = g.node_count();
    j["labels"] = labels_or_default(g);
    j["edges"] = edges_to_json(g.edges()); // Dag::edges() is already sorted
    return j.dump(2) + "\n";
}

Dag network_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw DataError(std::string("malformed network JSON: ") + e.what());
    }
    return dag_from_json(j);
}

void save_network(const std::string& path, const Dag& g) {
    write_text_file(path, network_to_json(g));
}

Dag load_network(const std::string& path) { return network_from_json(read_text_file(path)); }

std::string model_to_json(const GenerativeModel& model) {
    json j;
    j["k"] = model.structure.node_count();
    j["labels"] = labels_or_default(model.structure);
    j["edges"] = edges_to_json(model.structure.edges());
    json cpts = json::array();
    for (const auto& cpt : model.cpts) {
        json entry;
        entry["node"] = cpt.node;
        entry["parents"] = cpt.parents;
        entry["table"] = cpt.table;
        cpts.push_back(std::move(entry));
    }
    j["cpts"] = std::move(cpts);
    return j.dump(2) + "\n";
}

GenerativeModel model_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw DataError(std::string("malformed model JSON: ") + e.what());
    }
    GenerativeModel model;
    model.structure = dag_from_json(j);
    try {
        for (const auto& entry : j.at("cpts")) {
            Cpt cpt;
            cpt.node = entry.at("node").get<int>();
            cpt.parents = entry.at("parents").get<std::vector<int>>();
            cpt.table = entry.at("table").get<std::vector<double>>();
            if (cpt.table.size() != (size_t{1} << cpt.parents.size()))
                throw DataError("CPT table size does not match parent count");
            model.cpts.push_back(std::move(cpt));
        }
    } catch (const json::exception& e) {
        throw DataError(std::string("malformed model JSON: ") + e.what());
    }
    if (static_cast<int>(model.cpts.size()) != model.structure.node_count())
        throw DataError("model JSON: one CPT per node required");
    return model;
}

void save_model(const std::string& path, const GenerativeModel& model) {
    write_text_file(path, model_to_json(model));
}

GenerativeModel load_model(const std::string& path) {
    return model_from_json(read_text_file(path));
}

std::string mask_to_json(const ConstraintMask& mask, const std::vector<std::string>& labels) {
    Dag g(mask.k, labels);
    for (int u = 0; u < mask.k; ++u)
        for (int v = 0; v < mask.k; ++v)
            if (u != v && mask.is_allowed(u, v)) g.add_arc(u, v);
    return network_to_json(g);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write file: " + path);
    out << content;
    if (!out) throw DataError("failed writing file: " + path);
}

} // namespace sbcn
