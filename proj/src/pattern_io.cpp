#include "hjump/pattern_io.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hjump {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

RPattern parse_pattern_text(std::istream& in) {
    std::string line;
    int line_no = 0;
    int r = 0, n = 0;
    bool have_header = false;
    std::vector<std::vector<Vertex>> edges;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(strip_comment(line));
        if (!have_header) {
            std::string rt, nt;
            if (!(ls >> rt)) continue;  // blank or comment-only line
            if (!(ls >> nt) || rt.rfind("r=", 0) != 0 || nt.rfind("n=", 0) != 0)
                fail(line_no, "expected header 'r=<int> n=<int>'");
            std::string tail;
            if (ls >> tail) fail(line_no, "unexpected token '" + tail + "' after header");
            try {
                std::size_t used = 0;
                r = std::stoi(rt.substr(2), &used);
                if (used != rt.size() - 2) throw std::invalid_argument(rt);
                n = std::stoi(nt.substr(2), &used);
                if (used != nt.size() - 2) throw std::invalid_argument(nt);
            } catch (const std::exception&) {
                fail(line_no, "expected header 'r=<int> n=<int>'");
            }
            have_header = true;
            continue;
        }
        std::vector<Vertex> vs;
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                vs.push_back(v);
            } catch (const std::exception&) {
                fail(line_no, "malformed vertex token '" + tok + "'");
            }
        }
        if (vs.empty()) continue;
        if (static_cast<int>(vs.size()) != r)
            fail(line_no, "edge multiplicity " + std::to_string(vs.size()) +
                              " != r=" + std::to_string(r));
        for (Vertex v : vs)
            if (v < 1 || v > n)
                fail(line_no, "vertex " + std::to_string(v) + " out of range 1.." +
                                  std::to_string(n));
        edges.push_back(std::move(vs));
    }
    if (!have_header) throw std::invalid_argument("empty input: expected 'r=<int> n=<int>' header");
    return make_pattern(r, n, edges);
}

RPattern parse_pattern_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        int r = j.at("r").get<int>();
        int n = j.at("n").get<int>();
        std::vector<std::vector<Vertex>> edges;
        for (const auto& e : j.at("edges")) edges.push_back(e.get<std::vector<Vertex>>());
        return make_pattern(r, n, edges);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("pattern json: ") + e.what());
    }
}

RPattern parse_pattern_string(const std::string& text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '{') return parse_pattern_json(text);
        break;
    }
    std::istringstream in(text);
    return parse_pattern_text(in);
}

RPattern load_pattern(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return parse_pattern_string(buf.str());
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open pattern file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pattern_string(buf.str());
}

std::string write_pattern_text(const RPattern& p) {
    std::ostringstream out;
    out << "r=" << p.uniformity() << " n=" << p.order() << "\n";
    for (const Edge& e : p.edges()) {
        bool first = true;
        for (Vertex v : e.to_vertices()) {
            if (!first) out << ' ';
            out << v;
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

std::string write_pattern_json(const RPattern& p) {
    nlohmann::ordered_json j;
    j["r"] = p.uniformity();
    j["n"] = p.order();
    auto edges = nlohmann::ordered_json::array();
    for (const Edge& e : p.edges()) edges.push_back(e.to_vertices());
    j["edges"] = edges;
    return j.dump() + "\n";
}

void save_pattern(const RPattern& p, const std::string& path, bool json) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << (json ? write_pattern_json(p) : write_pattern_text(p));
    if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace hjump
