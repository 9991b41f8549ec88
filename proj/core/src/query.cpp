#include "ecnet/query.hpp"

#include <algorithm>
#include <cctype>

#include "ecnet/errors.hpp"
#include "ecnet/text.hpp"

namespace ecnet {

namespace {

bool is_space_char(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

std::vector<QueryToken> tokenize(std::string_view text) {
    std::vector<QueryToken> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (is_space_char(c)) {
            ++i;
            continue;
        }
        if (c == '"') {
            const std::size_t start = i;
            const auto close = text.find('"', i + 1);
            if (close == std::string_view::npos)
                throw ParseError("unterminated quote", start);
            tokens.push_back({QueryToken::Kind::QuotedPhrase,
                              std::string(text.substr(i + 1, close - i - 1)), start});
            i = close + 1;
            continue;
        }
        if (c == '[') {
            const std::size_t start = i;
            const auto close = text.find(']', i + 1);
            if (close == std::string_view::npos)
                throw ParseError("unterminated field tag", start);
            const std::string tag = to_lower(text.substr(i + 1, close - i - 1));
            if (tag != "ti" && tag != "ab" && tag != "pubdate")
                throw ParseError("unknown field tag: [" + tag + "]", start);
            tokens.push_back({QueryToken::Kind::FieldTag, tag, start});
            i = close + 1;
            continue;
        }
        if (c == '(') {
            tokens.push_back({QueryToken::Kind::LParen, "(", i});
            ++i;
            continue;
        }
        if (c == ')') {
            tokens.push_back({QueryToken::Kind::RParen, ")", i});
            ++i;
            continue;
        }
        if (c == ':') {
            tokens.push_back({QueryToken::Kind::Colon, ":", i});
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = i;
            while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
            const std::string word = to_lower(text.substr(start, i - start));
            if (word == "and") {
                tokens.push_back({QueryToken::Kind::OpAnd, "AND", start});
            } else if (word == "or") {
                tokens.push_back({QueryToken::Kind::OpOr, "OR", start});
            } else {
                throw ParseError("unexpected bare word '" + word + "' (phrases must be quoted)",
                                 start);
            }
            continue;
        }
        throw ParseError(std::string("stray character '") + c + "'", i);
    }
    return tokens;
}

QueryPtr make_term(std::string_view phrase, QueryField field) {
    auto node = std::make_unique<QueryNode>();
    node->kind = QueryNode::Kind::Term;
    node->phrase = normalize_phrase(phrase);
    node->field = field;
    return node;
}

QueryPtr make_date_range(const Date& start, const Date& end) {
    auto node = std::make_unique<QueryNode>();
    node->kind = QueryNode::Kind::DateRange;
    node->start = start;
    node->end = end;
    return node;
}

QueryPtr make_and(QueryPtr left, QueryPtr right) {
    auto node = std::make_unique<QueryNode>();
    node->kind = QueryNode::Kind::And;
    node->left = std::move(left);
    node->right = std::move(right);
    return node;
}

QueryPtr make_or(QueryPtr left, QueryPtr right) {
    auto node = std::make_unique<QueryNode>();
    node->kind = QueryNode::Kind::Or;
    node->left = std::move(left);
    node->right = std::move(right);
    return node;
}

QueryPtr clone(const QueryNode& node) {
    auto out = std::make_unique<QueryNode>();
    out->kind = node.kind;
    out->phrase = node.phrase;
    out->field = node.field;
    out->start = node.start;
    out->end = node.end;
    if (node.left) out->left = clone(*node.left);
    if (node.right) out->right = clone(*node.right);
    return out;
}

bool equal(const QueryNode& a, const QueryNode& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case QueryNode::Kind::Term:
            return a.phrase == b.phrase && a.field == b.field;
        case QueryNode::Kind::DateRange:
            return a.start == b.start && a.end == b.end;
        case QueryNode::Kind::And:
        case QueryNode::Kind::Or:
            return equal(*a.left, *b.left) && equal(*a.right, *b.right);
    }
    return false;
}

namespace {

class Parser {
public:
    explicit Parser(std::span<const QueryToken> tokens) : tokens_(tokens) {}

    QueryPtr parse() {
        if (tokens_.empty()) throw ParseError("empty query");
        auto ast = parse_or();
        if (pos_ < tokens_.size())
            throw ParseError("trailing tokens after query", tokens_[pos_].position);
        return ast;
    }

private:
    const QueryToken* peek() const { return pos_ < tokens_.size() ? &tokens_[pos_] : nullptr; }

    const QueryToken& expect(QueryToken::Kind kind, const char* what) {
        const auto* tok = peek();
        if (!tok || tok->kind != kind) {
            const std::size_t at = tok ? tok->position : last_position();
            throw ParseError(std::string("expected ") + what, at);
        }
        ++pos_;
        return *tok;
    }

    std::size_t last_position() const {
        return tokens_.empty() ? 0 : tokens_.back().position + tokens_.back().lexeme.size();
    }

    QueryPtr parse_or() {
        auto node = parse_and();
        while (peek() && peek()->kind == QueryToken::Kind::OpOr) {
            ++pos_;
            node = make_or(std::move(node), parse_and());
        }
        return node;
    }

    QueryPtr parse_and() {
        auto node = parse_unit();
        while (peek() && peek()->kind == QueryToken::Kind::OpAnd) {
            ++pos_;
            node = make_and(std::move(node), parse_unit());
        }
        return node;
    }

    QueryPtr parse_unit() {
        const auto* tok = peek();
        if (!tok) throw ParseError("dangling operator: missing operand", last_position());
        switch (tok->kind) {
            case QueryToken::Kind::LParen: {
                ++pos_;
                auto inner = parse_or();
                if (!peek() || peek()->kind != QueryToken::Kind::RParen)
                    throw ParseError("unbalanced parentheses: missing ')'", last_position());
                ++pos_;
                return inner;  // groups collapse; the tree stays canonical
            }
            case QueryToken::Kind::QuotedPhrase:
                return parse_term_or_range();
            case QueryToken::Kind::OpAnd:
            case QueryToken::Kind::OpOr:
                throw ParseError("dangling operator: missing operand", tok->position);
            case QueryToken::Kind::RParen:
                throw ParseError("unbalanced parentheses: unexpected ')'", tok->position);
            default:
                throw ParseError("unexpected token '" + tok->lexeme + "'", tok->position);
        }
    }

    QueryPtr parse_term_or_range() {
        const auto& phrase = expect(QueryToken::Kind::QuotedPhrase, "quoted phrase");
        const auto& tag = expect(QueryToken::Kind::FieldTag, "field tag after phrase");
        if (tag.lexeme == "ti" || tag.lexeme == "ab") {
            auto node = make_term(phrase.lexeme,
                                  tag.lexeme == "ti" ? QueryField::Title : QueryField::Abstract);
            if (node->phrase.empty()) throw ParseError("empty phrase", phrase.position);
            return node;
        }

        // "start"[PubDate] : "end"[PubDate]
        expect(QueryToken::Kind::Colon, "':' in date range");
        const auto& end_phrase = expect(QueryToken::Kind::QuotedPhrase, "end date of range");
        const auto& end_tag = expect(QueryToken::Kind::FieldTag, "[PubDate] after end date");
        if (end_tag.lexeme != "pubdate")
            throw ParseError("malformed date range: end tag must be [PubDate]", end_tag.position);
        Date start, end;
        try {
            start = parse_date(phrase.lexeme);
            end = parse_date(end_phrase.lexeme);
        } catch (const ParseError& e) {
            throw ParseError(std::string("malformed date range: ") + e.what(), phrase.position);
        }
        if (end < start)
            throw ParseError("malformed date range: start after end", phrase.position);
        return make_date_range(start, end);
    }

    std::span<const QueryToken> tokens_;
    std::size_t pos_ = 0;
};

int precedence(QueryNode::Kind kind) {
    switch (kind) {
        case QueryNode::Kind::Or: return 1;
        case QueryNode::Kind::And: return 2;
        default: return 3;
    }
}

void print_node(const QueryNode& node, int parent_prec, bool right_child, std::string& out) {
    const int prec = precedence(node.kind);
    const bool binary = node.kind == QueryNode::Kind::And || node.kind == QueryNode::Kind::Or;
    // Left-associated chains print bare; a same-precedence right child or a
    // looser operator needs parentheses to reparse identically.
    const bool parens = binary && (prec < parent_prec || (prec == parent_prec && right_child));
    if (parens) out += '(';
    switch (node.kind) {
        case QueryNode::Kind::Term:
            out += '"';
            out += node.phrase;
            out += node.field == QueryField::Title ? "\"[ti]" : "\"[ab]";
            break;
        case QueryNode::Kind::DateRange:
            out += '"';
            out += format_date(node.start);
            out += "\"[PubDate] : \"";
            out += format_date(node.end);
            out += "\"[PubDate]";
            break;
        case QueryNode::Kind::And:
            print_node(*node.left, prec, false, out);
            out += " AND ";
            print_node(*node.right, prec, true, out);
            break;
        case QueryNode::Kind::Or:
            print_node(*node.left, prec, false, out);
            out += " OR ";
            print_node(*node.right, prec, true, out);
            break;
    }
    if (parens) out += ')';
}

struct NormalizedPaper {
    std::string title;
    std::string abstract;
    const Date* date;
};

bool evaluate_node(const QueryNode& node, const NormalizedPaper& paper) {
    switch (node.kind) {
        case QueryNode::Kind::Term:
            return contains_phrase(
                node.field == QueryField::Title ? paper.title : paper.abstract, node.phrase);
        case QueryNode::Kind::DateRange:
            return node.start <= *paper.date && *paper.date <= node.end;
        case QueryNode::Kind::And:
            return evaluate_node(*node.left, paper) && evaluate_node(*node.right, paper);
        case QueryNode::Kind::Or:
            return evaluate_node(*node.left, paper) || evaluate_node(*node.right, paper);
    }
    return false;
}

}  // namespace

QueryPtr parse_query(std::span<const QueryToken> tokens) {
    return Parser(tokens).parse();
}

QueryPtr parse_query(std::string_view query_text) {
    const auto tokens = tokenize(query_text);
    return Parser(tokens).parse();
}

std::string print_query(const QueryNode& ast) {
    std::string out;
    print_node(ast, 0, false, out);
    return out;
}

bool evaluate_query(const QueryNode& ast, const PaperRecord& paper) {
    const NormalizedPaper ctx{normalize_text(paper.title).text,
                              normalize_text(paper.abstract).text, &paper.pub_date};
    return evaluate_node(ast, ctx);
}

std::vector<std::string> filter_corpus(const Corpus& corpus, const QueryNode& ast) {
    std::vector<std::string> matched;
    for (const auto& [id, rec] : corpus.papers()) {
        if (evaluate_query(ast, rec)) matched.push_back(id);
    }
    return matched;  // papers() iterates in id order
}

}  // namespace ecnet
