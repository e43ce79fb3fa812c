#include "rind/formats.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace rind {

namespace {

std::vector<std::string> content_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

}  // namespace

Graph parse_graph_text(std::istream& in) {
    std::vector<std::string> lines = content_lines(in);
    if (lines.empty()) throw ParseError("graph: missing header line");
    std::istringstream header(lines[0]);
    long n = -1, m = -1;
    std::string extra;
    if (!(header >> n >> m) || (header >> extra))
        throw ParseError("graph: header must be 'n m'");
    if (n < 0 || m < 0) throw ParseError("graph: negative counts in header");
    if (n > VertexSet::kCapacity)
        throw GuardError("graph: at most 64 vertices are supported, got " + std::to_string(n));
    if (static_cast<long>(lines.size()) - 1 != m)
        throw ParseError("graph: expected " + std::to_string(m) + " edge lines, got " +
                         std::to_string(lines.size() - 1));
    Graph g = Graph::with_vertex_count(static_cast<int>(n));
    for (long i = 0; i < m; ++i) {
        std::istringstream es(lines[static_cast<std::size_t>(i) + 1]);
        long u = -1, v = -1;
        if (!(es >> u >> v) || (es >> extra))
            throw ParseError("graph: edge line must be 'u v': " + lines[static_cast<std::size_t>(i) + 1]);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("graph: edge label out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u >= v) throw ParseError("graph: edges must satisfy u < v (no loops)");
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError("graph: duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    return parse_graph_text(in);
}

std::string graph_to_text(const Graph& g) {
    // Writing assumes dense labels 0..n-1, which every emitted graph has.
    std::ostringstream out;
    auto edges = g.edges();
    out << g.vertex_count() << " " << edges.size() << "\n";
    for (const auto& [u, v] : edges) out << u << " " << v << "\n";
    return out.str();
}

namespace {

json set_to_json(VertexSet s) {
    json arr = json::array();
    for (int v : s) arr.push_back(v);
    return arr;
}

VertexSet set_from_json(const json& arr) {
    if (!arr.is_array()) throw ParseError("expected an array of vertex labels");
    VertexSet s;
    for (const auto& v : arr) {
        if (!v.is_number_integer()) throw ParseError("vertex labels must be integers");
        int label = v.get<int>();
        if (label < 0 || label >= VertexSet::kCapacity)
            throw ParseError("vertex label out of range: " + std::to_string(label));
        if (s.contains(label)) throw ParseError("duplicate vertex label: " + std::to_string(label));
        s.insert(label);
    }
    return s;
}

json facets_to_json(const SimplicialComplex& k) {
    if (k.is_void()) return nullptr;
    json arr = json::array();
    for (const auto& f : k.facets()) arr.push_back(set_to_json(f));
    return arr;
}

}  // namespace

json complex_to_json(const SimplicialComplex& k) {
    json doc;
    doc["vertices"] = set_to_json(k.support());
    doc["facets"] = facets_to_json(k);
    return doc;
}

SimplicialComplex complex_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("facets"))
        throw ParseError("complex: expected an object with a 'facets' field");
    const json& facets = doc.at("facets");
    if (facets.is_null()) return SimplicialComplex::void_complex();
    if (!facets.is_array()) throw ParseError("complex: 'facets' must be null or an array");
    std::vector<VertexSet> sets;
    sets.reserve(facets.size());
    for (const auto& f : facets) sets.push_back(set_from_json(f));
    SimplicialComplex k = SimplicialComplex::from_facets(sets);
    if (k.facets().size() != sets.size())
        throw ParseError("complex: facet list is not an antichain of distinct sets");
    if (doc.contains("vertices") && set_from_json(doc.at("vertices")) != k.support())
        throw ParseError("complex: 'vertices' does not match the union of facets");
    return k;
}

SimplicialComplex load_complex(const std::string& path) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw ParseError("complex: invalid JSON in " + path + ": " + e.what());
    }
    return complex_from_json(doc);
}

json certificate_to_json(const Certificate& cert, const SimplicialComplex* complex) {
    json node;
    switch (cert.kind()) {
        case Certificate::Kind::Simplex: {
            node["node"] = "simplex";
            const auto& v = cert.simplex_vertices();
            node["vertices"] = v.has_value() ? set_to_json(*v) : json(nullptr);
            break;
        }
        case Certificate::Kind::Join: {
            node["node"] = "join";
            json parts = json::array();
            for (const auto& p : cert.parts()) parts.push_back(set_to_json(p));
            node["parts"] = parts;
            json children = json::array();
            for (std::size_t i = 0; i < cert.children().size(); ++i) {
                if (complex) {
                    std::vector<VertexSet> restricted;
                    for (const auto& f : complex->facets())
                        restricted.push_back(f & cert.parts()[i]);
                    SimplicialComplex piece = SimplicialComplex::from_facets(std::move(restricted));
                    children.push_back(certificate_to_json(cert.children()[i], &piece));
                } else {
                    children.push_back(certificate_to_json(cert.children()[i], nullptr));
                }
            }
            node["children"] = children;
            break;
        }
        case Certificate::Kind::Shed: {
            node["node"] = "shed";
            node["vertex"] = cert.shed_vertex();
            VertexSet v{cert.shed_vertex()};
            if (complex) {
                SimplicialComplex del = deletion(*complex, v);
                SimplicialComplex lnk = link(*complex, v);
                node["del"] = certificate_to_json(cert.del_branch(), &del);
                node["link"] = certificate_to_json(cert.link_branch(), &lnk);
            } else {
                node["del"] = certificate_to_json(cert.del_branch(), nullptr);
                node["link"] = certificate_to_json(cert.link_branch(), nullptr);
            }
            break;
        }
    }
    if (complex) node["facets"] = facets_to_json(*complex);
    return node;
}

Certificate certificate_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("node"))
        throw ParseError("certificate: expected an object with a 'node' tag");
    std::string tag = doc.at("node").get<std::string>();
    if (tag == "simplex") {
        const json& v = doc.at("vertices");
        if (v.is_null()) return Certificate::simplex(std::nullopt);
        return Certificate::simplex(set_from_json(v));
    }
    if (tag == "join") {
        std::vector<VertexSet> parts;
        for (const auto& p : doc.at("parts")) parts.push_back(set_from_json(p));
        std::vector<Certificate> children;
        for (const auto& c : doc.at("children")) children.push_back(certificate_from_json(c));
        if (children.size() != parts.size())
            throw ParseError("certificate: join children and parts must align");
        try {
            return Certificate::join(std::move(children), std::move(parts));
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("certificate: ") + e.what());
        }
    }
    if (tag == "shed") {
        int vertex = doc.at("vertex").get<int>();
        if (vertex < 0 || vertex >= VertexSet::kCapacity)
            throw ParseError("certificate: shed vertex out of range");
        return Certificate::shed(vertex, certificate_from_json(doc.at("del")),
                                 certificate_from_json(doc.at("link")));
    }
    throw ParseError("certificate: unknown node tag '" + tag + "'");
}

Certificate load_certificate(const std::string& path) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw ParseError("certificate: invalid JSON in " + path + ": " + e.what());
    }
    return certificate_from_json(doc);
}

json witness_to_json(const NonVdWitness& w) {
    json doc;
    doc["node"] = "witness";
    doc["facets"] = facets_to_json(w.complex);
    json reasons = json::array();
    for (const auto& reason : w.reasons) {
        json r;
        r["vertex"] = reason.vertex;
        switch (reason.kind) {
            case WitnessReason::Kind::NotShedding:
                r["kind"] = "not_shedding";
                r["facet"] = set_to_json(reason.offending_facet);
                break;
            case WitnessReason::Kind::DelFails:
                r["kind"] = "del_fails";
                r["witness"] = witness_to_json(*reason.sub);
                break;
            case WitnessReason::Kind::LinkFails:
                r["kind"] = "link_fails";
                r["witness"] = witness_to_json(*reason.sub);
                break;
        }
        reasons.push_back(r);
    }
    doc["reasons"] = reasons;
    return doc;
}

NonVdWitness witness_from_json(const json& doc) {
    if (!doc.is_object() || doc.value("node", "") != std::string("witness"))
        throw ParseError("witness: expected an object tagged 'witness'");
    NonVdWitness w;
    json complex_doc;
    complex_doc["facets"] = doc.at("facets");
    w.complex = complex_from_json(complex_doc);
    for (const auto& r : doc.at("reasons")) {
        WitnessReason reason;
        reason.vertex = r.at("vertex").get<int>();
        std::string kind = r.at("kind").get<std::string>();
        if (kind == "not_shedding") {
            reason.kind = WitnessReason::Kind::NotShedding;
            reason.offending_facet = set_from_json(r.at("facet"));
        } else if (kind == "del_fails") {
            reason.kind = WitnessReason::Kind::DelFails;
            reason.sub = std::make_shared<NonVdWitness>(witness_from_json(r.at("witness")));
        } else if (kind == "link_fails") {
            reason.kind = WitnessReason::Kind::LinkFails;
            reason.sub = std::make_shared<NonVdWitness>(witness_from_json(r.at("witness")));
        } else {
            throw ParseError("witness: unknown reason kind '" + kind + "'");
        }
        w.reasons.push_back(std::move(reason));
    }
    return w;
}

namespace {

void dot_nodes(const Certificate& cert, std::ostream& out, int& counter) {
    int id = counter++;
    switch (cert.kind()) {
        case Certificate::Kind::Simplex: {
            const auto& v = cert.simplex_vertices();
            std::string label = !v.has_value() ? "simplex (void)"
                                : v->empty()   ? "simplex {}"
                                               : "simplex " + v->to_string();
            out << "  n" << id << " [label=\"" << label << "\"];\n";
            break;
        }
        case Certificate::Kind::Join: {
            out << "  n" << id << " [label=\"join\"];\n";
            for (std::size_t i = 0; i < cert.children().size(); ++i) {
                int child = counter;
                dot_nodes(cert.children()[i], out, counter);
                out << "  n" << id << " -> n" << child << " [label=\"part "
                    << cert.parts()[i].to_string() << "\"];\n";
            }
            break;
        }
        case Certificate::Kind::Shed: {
            out << "  n" << id << " [label=\"shed " << cert.shed_vertex() << "\"];\n";
            int del_id = counter;
            dot_nodes(cert.del_branch(), out, counter);
            out << "  n" << id << " -> n" << del_id << " [label=\"del\"];\n";
            int link_id = counter;
            dot_nodes(cert.link_branch(), out, counter);
            out << "  n" << id << " -> n" << link_id << " [label=\"link\"];\n";
            break;
        }
    }
}

}  // namespace

std::string certificate_to_dot(const Certificate& cert) {
    std::ostringstream out;
    out << "digraph decomposition {\n  node [shape=box];\n";
    int counter = 0;
    dot_nodes(cert, out, counter);
    out << "}\n";
    return out.str();
}

std::string dump_json(const json& doc) { return doc.dump(2) + "\n"; }

void write_file_atomic(const std::string& path, const std::string& contents) {
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
        out << contents;
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace rind
