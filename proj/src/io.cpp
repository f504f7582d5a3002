#include "rtl/io.hpp"

#include <algorithm>
#include <fstream>

#include "rtl/common.hpp"

namespace rtl {

namespace {

std::string label(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw PreconditionError("vertex labels must be strings or integers, got " + v.dump());
}

mpq_class coefficient(const nlohmann::json& c) {
    if (c.is_number_integer()) return mpq_class(c.get<long>());
    if (!c.is_string()) throw PreconditionError("coefficient must be a string or an integer, got " + c.dump());
    mpq_class q;
    if (q.set_str(c.get<std::string>(), 10) != 0 || q.get_den() == 0)
        throw PreconditionError("cannot parse coefficient '" + c.get<std::string>() + "'");
    q.canonicalize();
    return q;
}

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw PreconditionError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

}  // namespace

Presentation presentation_from_json(const nlohmann::json& j) {
    Presentation p;
    try {
        for (const auto& v : field(j, "vertices")) p.quiver.add_vertex(label(v));
        for (const auto& a : field(j, "arrows"))
            p.quiver.add_arrow(field(a, "id").get<std::string>(), p.quiver.vertex_index(label(field(a, "src"))),
                               p.quiver.vertex_index(label(field(a, "tgt"))));
        if (j.contains("relations")) {
            for (const auto& rel : j.at("relations")) {
                std::vector<std::pair<mpq_class, std::string>> terms;
                for (const auto& t : rel) {
                    mpq_class c = t.contains("c") ? coefficient(t.at("c")) : mpq_class(1);
                    std::string word;
                    if (t.contains("word")) {
                        word = t.at("word").get<std::string>();
                    } else {
                        // application order -> displayed word (rightmost applied first)
                        const auto& path = field(t, "path");
                        for (auto it = path.rbegin(); it != path.rend(); ++it)
                            word += (word.empty() ? "" : " ") + it->get<std::string>();
                    }
                    terms.push_back({c, word});
                }
                p.relations.push_back(make_relation(p.quiver, terms));
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("malformed presentation JSON: ") + e.what());
    }
    validate(p);
    return p;
}

nlohmann::json presentation_to_json(const Presentation& p) {
    const Quiver& q = p.quiver;
    nlohmann::json arrows = nlohmann::json::array(), rels = nlohmann::json::array();
    for (const auto& a : q.arrows()) arrows.push_back({{"id", a.id}, {"src", q.vertex(a.src)}, {"tgt", q.vertex(a.tgt)}});
    for (const auto& r : p.relations) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& t : r.terms) {
            nlohmann::json path = nlohmann::json::array();
            for (int a : t.path) path.push_back(q.arrow(a).id);
            terms.push_back({{"c", t.c.get_str()}, {"path", path}});
        }
        rels.push_back(terms);
    }
    return {{"vertices", q.vertices()}, {"arrows", arrows}, {"relations", rels}};
}

Graph graph_from_json(const nlohmann::json& j) {
    if (j.is_object() && j.contains("arrows")) return underlying_graph(presentation_from_json(j).quiver);
    Graph g;
    try {
        std::vector<std::string> labels;
        for (const auto& v : field(j, "vertices")) labels.push_back(label(v));
        auto index = [&](const nlohmann::json& v) {
            auto it = std::find(labels.begin(), labels.end(), label(v));
            if (it == labels.end()) throw PreconditionError("edge endpoint " + v.dump() + " is not a vertex");
            return static_cast<int>(it - labels.begin());
        };
        g.n = static_cast<int>(labels.size());
        g.labels = labels;
        for (const auto& e : field(j, "edges")) {
            if (!e.is_array() || e.size() != 2) throw PreconditionError("edges are pairs, got " + e.dump());
            g.edges.push_back({index(e[0]), index(e[1])});
        }
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("malformed graph JSON: ") + e.what());
    }
    return g;
}

nlohmann::json graph_to_json(const Graph& g) {
    std::vector<std::string> labels = g.labels;
    for (int v = static_cast<int>(labels.size()); v < g.n; ++v) labels.push_back(std::to_string(v));
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges) edges.push_back({labels[u], labels[v]});
    return {{"vertices", labels}, {"edges", edges}};
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw PreconditionError("cannot parse " + path + ": " + e.what());
    }
}

}  // namespace rtl
