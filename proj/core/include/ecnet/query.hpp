#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ecnet/corpus.hpp"
#include "ecnet/date.hpp"

namespace ecnet {

// Field-tagged boolean search language:
//   "phrase"[ti]  "phrase"[ab]  "date"[PubDate] : "date"[PubDate]
//   AND  OR  ( )          with AND binding tighter than OR.
// Phrases match as whole token sequences on word boundaries,
// case-insensitively; date ranges are inclusive.

enum class QueryField : std::uint8_t { Title, Abstract };

struct QueryToken {
    enum class Kind : std::uint8_t {
        QuotedPhrase,
        FieldTag,  // lexeme is the lowercased tag: "ti", "ab" or "pubdate"
        OpAnd,
        OpOr,
        LParen,
        RParen,
        Colon,
    };
    Kind kind;
    std::string lexeme;
    std::size_t position = 0;  // byte offset of the token start
};

std::vector<QueryToken> tokenize(std::string_view query_text);

struct QueryNode;
using QueryPtr = std::unique_ptr<QueryNode>;

struct QueryNode {
    enum class Kind : std::uint8_t { Term, And, Or, DateRange };
    Kind kind;

    // Term: normalized phrase + field.
    std::string phrase;
    QueryField field = QueryField::Title;

    // DateRange (inclusive on both ends).
    Date start;
    Date end;

    // And / Or: exactly two children.
    QueryPtr left;
    QueryPtr right;
};

QueryPtr make_term(std::string_view phrase, QueryField field);
QueryPtr make_date_range(const Date& start, const Date& end);
QueryPtr make_and(QueryPtr left, QueryPtr right);
QueryPtr make_or(QueryPtr left, QueryPtr right);

QueryPtr clone(const QueryNode& node);
bool equal(const QueryNode& a, const QueryNode& b);

// Parses to a canonical left-associated tree; parentheses group and are not
// materialized. Throws ParseError.
QueryPtr parse_query(std::span<const QueryToken> tokens);
QueryPtr parse_query(std::string_view query_text);

// Canonical form with minimal parentheses; parse_query(print_query(x)) == x.
std::string print_query(const QueryNode& ast);

bool evaluate_query(const QueryNode& ast, const PaperRecord& paper);

// Paper ids for which the query evaluates true, ascending.
std::vector<std::string> filter_corpus(const Corpus& corpus, const QueryNode& ast);

}  // namespace ecnet
