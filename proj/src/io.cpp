#include "homlab/io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "homlab/errors.hpp"
#include "homlab/families.hpp"

namespace homlab {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream stream(line);
    std::string token;
    while (stream >> token) tokens.push_back(token);
    return tokens;
}

int parse_id(const std::string& token, const std::string& where) {
    try {
        size_t pos = 0;
        int value = std::stoi(token, &pos);
        if (pos != token.size() || value < 0) throw std::invalid_argument("");
        return value;
    } catch (...) {
        throw parse_error(where + ": expected a non-negative id, got '" + token + "'");
    }
}

} // namespace

ParsedInput parse_input_text(const std::string& text, const std::string& origin) {
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    int n = -1;
    bool saw_edges = false, saw_arcs = false, saw_sig = false;
    std::vector<std::pair<int, int>> pairs;
    std::vector<Symbol> symbols;
    std::vector<std::vector<std::vector<int>>> tuples;

    while (std::getline(stream, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        const std::string where = origin + ":" + std::to_string(line_no);
        const std::string& kind = tokens[0];
        if (kind == "n") {
            if (tokens.size() != 2) throw parse_error(where + ": expected 'n <count>'");
            n = parse_id(tokens[1], where);
        } else if (kind == "e" || kind == "a") {
            if (tokens.size() != 3)
                throw parse_error(where + ": expected '" + kind + " <u> <v>'");
            if (n < 0) throw parse_error(where + ": vertex count must come first");
            if (saw_sig) throw parse_error(where + ": cannot mix edges with sig/t lines");
            if ((kind == "e" && saw_arcs) || (kind == "a" && saw_edges))
                throw parse_error(where + ": cannot mix 'e' and 'a' lines");
            int u = parse_id(tokens[1], where), v = parse_id(tokens[2], where);
            if (u >= n || v >= n)
                throw parse_error(where + ": endpoint out of range for n=" + std::to_string(n));
            if (u == v) throw parse_error(where + ": loops are not allowed");
            (kind == "e" ? saw_edges : saw_arcs) = true;
            pairs.emplace_back(u, v);
        } else if (kind == "sig") {
            if (saw_edges || saw_arcs)
                throw parse_error(where + ": cannot mix sig with edge lines");
            saw_sig = true;
            for (size_t i = 1; i < tokens.size(); ++i) {
                auto slash = tokens[i].find('/');
                if (slash == std::string::npos)
                    throw parse_error(where + ": expected <name>/<arity>");
                std::string name = tokens[i].substr(0, slash);
                int arity = parse_id(tokens[i].substr(slash + 1), where);
                symbols.push_back(Symbol{name, arity});
                tuples.emplace_back();
            }
        } else if (kind == "t") {
            if (!saw_sig) throw parse_error(where + ": 't' line before 'sig'");
            if (n < 0) throw parse_error(where + ": vertex count must come before tuples");
            if (tokens.size() < 2) throw parse_error(where + ": expected 't <name> <ids>'");
            int idx = -1;
            for (size_t s = 0; s < symbols.size(); ++s)
                if (symbols[s].name == tokens[1]) idx = static_cast<int>(s);
            if (idx < 0) throw parse_error(where + ": unknown symbol '" + tokens[1] + "'");
            if (static_cast<int>(tokens.size()) - 2 != symbols[idx].arity)
                throw parse_error(where + ": arity mismatch for '" + tokens[1] + "'");
            std::vector<int> tuple;
            for (size_t i = 2; i < tokens.size(); ++i) {
                int v = parse_id(tokens[i], where);
                if (v >= n)
                    throw parse_error(where + ": id out of range for n=" + std::to_string(n));
                tuple.push_back(v);
            }
            tuples[idx].push_back(std::move(tuple));
        } else {
            throw parse_error(where + ": unknown directive '" + kind + "'");
        }
    }
    if (n < 0) throw parse_error(origin + ": missing 'n <count>' line");

    if (saw_sig) {
        std::vector<Relation> rels;
        for (size_t s = 0; s < symbols.size(); ++s) {
            Relation rel{symbols[s].arity, {}};
            for (const auto& t : tuples[s]) rel.flat.insert(rel.flat.end(), t.begin(), t.end());
            rels.push_back(std::move(rel));
        }
        return Structure(Signature(symbols), n, std::move(rels));
    }
    if (saw_arcs) return Digraph(n, std::move(pairs));
    return Graph(n, std::move(pairs));
}

std::optional<ParsedInput> builtin_named(const std::string& name) {
    auto int_suffix = [&](size_t from) -> std::optional<int> {
        if (from >= name.size()) return std::nullopt;
        for (size_t i = from; i < name.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
        return std::stoi(name.substr(from));
    };
    try {
        if (name == "petersen") return ParsedInput{petersen_graph()};
        if (name.size() >= 2 && name[0] == 'K') {
            auto comma = name.find(',');
            if (comma != std::string::npos) {
                std::string left = name.substr(1, comma - 1), right = name.substr(comma + 1);
                if (!left.empty() && !right.empty())
                    return ParsedInput{complete_bipartite(std::stoi(left), std::stoi(right))};
            }
            if (auto k = int_suffix(1)) return ParsedInput{complete_graph(*k)};
        }
        if (name.size() >= 2 && name[0] == 'C')
            if (auto k = int_suffix(1)) return ParsedInput{cycle_graph(*k)};
        if (name.size() >= 2 && name[0] == 'P')
            if (auto k = int_suffix(1)) return ParsedInput{path_graph(*k)};
        if (name.size() >= 2 && name[0] == 'T')
            if (auto k = int_suffix(1)) return ParsedInput{transitive_tournament(*k)};
        if (name.size() >= 3 && name.substr(0, 2) == "DP")
            if (auto k = int_suffix(2)) return ParsedInput{directed_path(*k)};
        if (name.size() >= 3 && name.substr(0, 2) == "DC")
            if (auto k = int_suffix(2)) return ParsedInput{directed_cycle(*k)};
    } catch (const argument_error&) {
        return std::nullopt;
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return std::nullopt;
}

ParsedInput parse_input(const std::string& path_or_name) {
    if (std::filesystem::exists(path_or_name)) {
        std::ifstream file(path_or_name);
        if (!file) throw parse_error(path_or_name + ": cannot open");
        std::ostringstream content;
        content << file.rdbuf();
        return parse_input_text(content.str(), path_or_name);
    }
    if (auto builtin = builtin_named(path_or_name)) return *builtin;
    throw parse_error(path_or_name + ": no such file and not a built-in name");
}

std::string to_text(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
    return out.str();
}

std::string to_text(const Digraph& g) {
    std::ostringstream out;
    out << "n " << g.order() << '\n';
    for (auto [u, v] : g.arcs()) out << "a " << u << ' ' << v << '\n';
    return out.str();
}

std::string to_text(const Structure& s) {
    std::ostringstream out;
    out << "sig";
    for (const auto& sym : s.sig().symbols()) out << ' ' << sym.name << '/' << sym.arity;
    out << '\n' << "n " << s.order() << '\n';
    for (int r = 0; r < s.sig().symbol_count(); ++r) {
        const auto& rel = s.relation(r);
        for (int i = 0; i < rel.tuple_count(); ++i) {
            out << "t " << s.sig().symbol(r).name;
            for (int x : rel.tuple(i)) out << ' ' << x;
            out << '\n';
        }
    }
    return out.str();
}

std::string to_text(const ParsedInput& in) {
    return std::visit([](const auto& value) { return to_text(value); }, in);
}

std::string to_compact_text(const Structure& s) {
    if (auto g = as_graph(s)) {
        std::ostringstream out;
        out << "n " << g->order();
        for (auto [u, v] : g->edges()) out << "; e " << u << ' ' << v;
        return out.str();
    }
    if (auto g = as_digraph(s)) {
        std::ostringstream out;
        out << "n " << g->order();
        for (auto [u, v] : g->arcs()) out << "; a " << u << ' ' << v;
        return out.str();
    }
    std::string text = to_text(s);
    for (auto& c : text)
        if (c == '\n') c = ';';
    if (!text.empty() && text.back() == ';') text.pop_back();
    return text;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path);
    if (!file) throw argument_error("cannot write " + path);
    file << content;
}

Structure as_structure(const ParsedInput& in) {
    if (std::holds_alternative<Graph>(in)) return to_structure(std::get<Graph>(in));
    if (std::holds_alternative<Digraph>(in)) return to_structure(std::get<Digraph>(in));
    return std::get<Structure>(in);
}

Graph require_graph(const ParsedInput& in, const std::string& what) {
    if (std::holds_alternative<Graph>(in)) return std::get<Graph>(in);
    if (std::holds_alternative<Structure>(in)) {
        if (auto g = as_graph(std::get<Structure>(in))) return *g;
    }
    throw argument_error(what + ": expected an undirected graph");
}

Digraph require_digraph(const ParsedInput& in, const std::string& what) {
    if (std::holds_alternative<Digraph>(in)) return std::get<Digraph>(in);
    if (std::holds_alternative<Structure>(in)) {
        if (auto g = as_digraph(std::get<Structure>(in))) return *g;
    }
    throw argument_error(what + ": expected a directed graph");
}

} // namespace homlab
