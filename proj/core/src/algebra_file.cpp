#include "sea/algebra_file.hpp"

#include <fstream>
#include <sstream>

namespace sea {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        if (tok[0] == '#') break;
        tokens.push_back(tok);
    }
    return tokens;
}

struct RawLine {
    int number;
    std::vector<std::string> tokens;
};

}  // namespace

AlgebraFile parse_algebra(const std::string& text) {
    std::vector<RawLine> lines;
    {
        std::istringstream is(text);
        std::string line;
        int number = 0;
        while (std::getline(is, line)) {
            ++number;
            auto tokens = tokenize(line);
            if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
        }
    }

    std::string name = "unnamed";
    std::optional<std::vector<std::string>> elements;
    int elements_line = 0;
    struct Entry {
        std::string a, b, c;
        int line;
    };
    std::vector<Entry> sums, prods;

    for (const auto& [number, tokens] : lines) {
        const std::string& head = tokens[0];
        if (head == "algebra") {
            if (tokens.size() != 2) throw ParseError(number, "expected: algebra NAME");
            name = tokens[1];
        } else if (head == "elements") {
            if (elements) throw ParseError(number, "duplicate elements line");
            if (tokens.size() < 2)
                throw ParseError(number, "elements line lists no elements");
            elements.emplace(tokens.begin() + 1, tokens.end());
            elements_line = number;
        } else if (head == "sum" || head == "prod") {
            if (tokens.size() != 5 || tokens[3] != "=")
                throw ParseError(number, "expected: " + head + " A B = C");
            (head == "sum" ? sums : prods)
                .push_back({tokens[1], tokens[2], tokens[4], number});
        } else {
            throw ParseError(number, "unknown directive '" + head + "'");
        }
    }

    if (!elements) throw ParseError(1, "missing elements line");
    for (const char* required : {"0", "1"}) {
        bool found = false;
        for (const auto& e : *elements)
            if (e == required) { found = true; break; }
        if (!found)
            throw ParseError(elements_line,
                             std::string("elements must include '") + required + "'");
    }
    for (size_t i = 0; i < elements->size(); ++i)
        for (size_t j = i + 1; j < elements->size(); ++j)
            if ((*elements)[i] == (*elements)[j])
                throw ParseError(elements_line,
                                 "duplicate element '" + (*elements)[i] + "'");

    FiniteEffectAlgebra algebra(name, *elements, "0", "1");
    const auto id_checked = [&](const std::string& token, int line) {
        const auto id = algebra.find(token);
        if (!id) throw ParseError(line, "undeclared element '" + token + "'");
        return *id;
    };

    // implicit rule: 0 ⊕ x = x for every declared x
    for (ElemId x = 0; x < algebra.size(); ++x)
        algebra.set_sum(algebra.zero(), x, x);

    for (const auto& entry : sums) {
        const ElemId a = id_checked(entry.a, entry.line);
        const ElemId b = id_checked(entry.b, entry.line);
        const ElemId c = id_checked(entry.c, entry.line);
        try {
            algebra.set_sum(a, b, c);  // stores both orders
        } catch (const StructuralError&) {
            throw ParseError(entry.line,
                             "conflicting sum " + entry.a + " + " + entry.b + " = " +
                                 entry.c + " (already " +
                                 algebra.element_name(*algebra.sum(a, b)) + ")");
        }
    }

    AlgebraFile file{name, std::move(algebra), std::nullopt};
    if (!prods.empty()) {
        SeqProductTable table(file.algebra.size());
        std::vector<int> line_of(size_t(file.algebra.size()) *
                                     size_t(file.algebra.size()),
                                 0);
        for (const auto& entry : prods) {
            const ElemId a = id_checked(entry.a, entry.line);
            const ElemId b = id_checked(entry.b, entry.line);
            const ElemId c = id_checked(entry.c, entry.line);
            const auto existing = table.at(a, b);
            if (existing != kUndefined && existing != c)
                throw ParseError(entry.line,
                                 "conflicting prod " + entry.a + " " + entry.b +
                                     " = " + entry.c + " (already " +
                                     file.algebra.element_name(existing) + ")");
            table.set(a, b, c);
            line_of[size_t(a) * size_t(file.algebra.size()) + size_t(b)] = entry.line;
        }
        for (ElemId a = 0; a < file.algebra.size(); ++a)
            for (ElemId b = 0; b < file.algebra.size(); ++b)
                if (table.at(a, b) == kUndefined)
                    throw ParseError(prods.back().line,
                                     "prod table is partial: missing " +
                                         file.algebra.element_name(a) + " " +
                                         file.algebra.element_name(b));
        file.product = std::move(table);
    }
    return file;
}

std::string serialize_algebra(const AlgebraFile& file) {
    const auto& ea = file.algebra;

    // the file format pins the bounds to the literal names 0 and 1
    std::vector<std::string> names = ea.elements();
    for (auto [id, literal] : {std::pair<ElemId, const char*>{ea.zero(), "0"},
                               std::pair<ElemId, const char*>{ea.one(), "1"}}) {
        if (names[size_t(id)] == literal) continue;
        for (ElemId other = 0; other < ea.size(); ++other)
            if (other != id && names[size_t(other)] == literal)
                throw StructuralError("serialize_algebra: element '" +
                                      std::string(literal) +
                                      "' is not the bound it names");
        names[size_t(id)] = literal;
    }

    std::ostringstream os;
    os << "algebra " << file.name << "\n";
    os << "elements";
    for (const auto& e : names) os << " " << e;
    os << "\n";
    for (ElemId a = 0; a < ea.size(); ++a) {
        if (a == ea.zero()) continue;  // implicit zero sums
        for (ElemId b = a; b < ea.size(); ++b) {
            if (b == ea.zero()) continue;
            if (const auto c = ea.sum(a, b))
                os << "sum " << names[size_t(a)] << " " << names[size_t(b)]
                   << " = " << names[size_t(*c)] << "\n";
        }
    }
    if (file.product)
        for (ElemId a = 0; a < ea.size(); ++a)
            for (ElemId b = 0; b < ea.size(); ++b)
                os << "prod " << names[size_t(a)] << " " << names[size_t(b)]
                   << " = " << names[size_t(file.product->at(a, b))] << "\n";
    return os.str();
}

AlgebraFile load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_algebra(buffer.str());
}

}  // namespace sea
