#include "bhk/polynomial.hpp"

#include "bhk/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace bhk {

namespace {

struct Token {
    enum Kind { Ident, Number, Caret, Star, Plus, End } kind;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == text_.size()) return {Token::End, ""};
        const char c = text_[pos_];
        if (c == '^') { ++pos_; return {Token::Caret, "^"}; }
        if (c == '*') { ++pos_; return {Token::Star, "*"}; }
        if (c == '+') { ++pos_; return {Token::Plus, "+"}; }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            std::size_t start = pos_;
            if (c == '-') ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == start + (c == '-' ? 1u : 0u))
                throw parse_error("stray '-' in polynomial");
            return {Token::Number, text_.substr(start, pos_ - start)};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            return {Token::Ident, text_.substr(start, pos_ - start)};
        }
        throw parse_error(std::string("unexpected character '") + c + "' in polynomial");
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

bool monomial_order_before(const IntVector& a, const IntVector& b) {
    const Int da = std::accumulate(a.begin(), a.end(), Int(0));
    const Int db = std::accumulate(b.begin(), b.end(), Int(0));
    if (da != db) return da > db;
    return a > b; // lexicographic descending within a degree
}

ExponentMatrix::ExponentMatrix(IntMatrix p, std::vector<std::string> variables)
    : p_(std::move(p)), variables_(std::move(variables)) {}

ExponentMatrix ExponentMatrix::parse(const std::string& text,
                                     const std::vector<std::string>& variables) {
    if (variables.empty()) throw parse_error("no variables declared");
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < variables.size(); ++i) {
        if (variables[i].empty() || (!std::isalpha(static_cast<unsigned char>(variables[i][0])) &&
                                     variables[i][0] != '_'))
            throw parse_error("invalid variable name '" + variables[i] + "'");
        if (!index.emplace(variables[i], i).second)
            throw parse_error("duplicate variable '" + variables[i] + "'");
    }

    Lexer lex(text);
    Token tok = lex.next();
    std::vector<IntVector> columns;

    const auto parse_monomial = [&]() {
        IntVector exps(variables.size());
        for (;;) {
            if (tok.kind == Token::Number)
                throw parse_error("explicit numeric coefficient '" + tok.text + "' not allowed");
            if (tok.kind != Token::Ident)
                throw parse_error("expected a variable, got '" + tok.text + "'");
            const auto it = index.find(tok.text);
            if (it == index.end()) throw parse_error("unknown variable '" + tok.text + "'");
            Int exp = 1;
            tok = lex.next();
            if (tok.kind == Token::Caret) {
                tok = lex.next();
                if (tok.kind != Token::Number)
                    throw parse_error("expected an integer exponent after '^'");
                exp = Int(tok.text);
                if (exp < 1) throw parse_error("exponent must be >= 1, got " + tok.text);
                tok = lex.next();
            }
            exps[it->second] += exp;
            if (tok.kind != Token::Star) break;
            tok = lex.next();
        }
        columns.push_back(std::move(exps));
    };

    if (tok.kind == Token::End) throw parse_error("empty polynomial");
    parse_monomial();
    while (tok.kind == Token::Plus) {
        tok = lex.next();
        parse_monomial();
    }
    if (tok.kind != Token::End)
        throw parse_error("unexpected trailing token '" + tok.text + "'");

    return from_matrix(IntMatrix::from_column_vectors(columns, variables.size()), variables, true);
}

ExponentMatrix ExponentMatrix::from_matrix(IntMatrix p, std::vector<std::string> variables,
                                           bool canonicalize) {
    if (p.rows() != variables.size())
        throw dimension_error("matrix row count != variable count");
    if (p.rows() == 0 || p.cols() == 0)
        throw parse_error("exponent matrix must be at least 1x1");
    std::vector<IntVector> columns;
    columns.reserve(p.cols());
    for (std::size_t j = 0; j < p.cols(); ++j) {
        IntVector c = p.col(j);
        for (const Int& e : c)
            if (e < 0) throw parse_error("negative exponent in column " + std::to_string(j));
        columns.push_back(std::move(c));
    }
    if (canonicalize) std::sort(columns.begin(), columns.end(), monomial_order_before);
    for (std::size_t j = 0; j + 1 < columns.size(); ++j)
        for (std::size_t k = j + 1; k < columns.size(); ++k)
            if (columns[j] == columns[k]) throw parse_error("duplicate monomial");
    return ExponentMatrix(IntMatrix::from_column_vectors(columns, p.rows()), std::move(variables));
}

std::string ExponentMatrix::polynomial_string() const {
    std::string out;
    for (std::size_t j = 0; j < p_.cols(); ++j) {
        if (j > 0) out += " + ";
        bool first = true;
        for (std::size_t i = 0; i < p_.rows(); ++i) {
            const Int& e = p_(i, j);
            if (e == 0) continue;
            if (!first) out += "*";
            out += variables_[i];
            if (e != 1) out += "^" + e.str();
            first = false;
        }
        if (first) out += "1"; // constant monomial (all exponents zero)
    }
    return out;
}

std::vector<std::string> ExponentMatrix::unused_variables() const {
    std::vector<std::string> unused;
    for (std::size_t i = 0; i < p_.rows(); ++i) {
        bool used = false;
        for (std::size_t j = 0; j < p_.cols() && !used; ++j) used = p_(i, j) != 0;
        if (!used) unused.push_back(variables_[i]);
    }
    return unused;
}

} // namespace bhk
