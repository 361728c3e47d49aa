#pragma once

// Two reference parsers that bracket the learned models from below:
// a taxonomy/Resnik keyword matcher and a question-type -> expected-POS
// extractor. Both are pure lookups once their data files are loaded.

#include <cmath>
#include <cstddef>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "anspar/templates.hpp"
#include "anspar/types.hpp"

namespace anspar {

struct TaxonomyNode {
    std::string name;
    int parent = -1;          // -1 for the root
    long long count = 0;      // own corpus count, not including descendants
    long long subtree = 0;    // count summed over this node and its subtree
    double ic = 0.0;          // -ln(subtree / total), smoothed
    std::vector<int> children;
};

struct Taxonomy {
    std::vector<TaxonomyNode> nodes;
    std::unordered_map<std::string, int> concept_index;
    std::unordered_map<std::string, int> word_to_concept;  // first mapping wins
    int root = -1;
    long long total = 0;  // smoothed subtree count of the root

    bool has_word(const std::string& w) const { return word_to_concept.count(w) != 0; }
};

namespace detail {

inline std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

// Walks parent links; the loader's reachability check bounds the walk.
inline int lowest_common_subsumer(const Taxonomy& tax, int a, int b) {
    std::unordered_set<int> seen;
    for (int n = a; n != -1; n = tax.nodes[static_cast<size_t>(n)].parent) seen.insert(n);
    for (int n = b; n != -1; n = tax.nodes[static_cast<size_t>(n)].parent)
        if (seen.count(n)) return n;
    return tax.root;
}

}  // namespace detail

// File format, one concept per line:
//   concept<TAB>parent<TAB>count<TAB>word1,word2,...
// The root names "-" as its parent. Words may be empty for purely structural
// concepts. "#" lines and blank lines are skipped. Forward references to
// parents are allowed.
inline Taxonomy load_taxonomy(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("taxonomy: cannot open " + path);

    Taxonomy tax;
    std::vector<std::string> parent_names;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto fields = detail::split_on(line, '\t');
        if (fields.size() != 4)
            throw std::runtime_error("taxonomy: line " + std::to_string(lineno) +
                                     ": expected 4 tab-separated fields, got " +
                                     std::to_string(fields.size()));
        const std::string& name = fields[0];
        if (name.empty())
            throw std::runtime_error("taxonomy: line " + std::to_string(lineno) +
                                     ": empty concept name");
        if (tax.concept_index.count(name))
            throw std::runtime_error("taxonomy: line " + std::to_string(lineno) +
                                     ": duplicate concept '" + name + "'");
        long long count = 0;
        try {
            size_t used = 0;
            count = std::stoll(fields[2], &used);
            if (used != fields[2].size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw std::runtime_error("taxonomy: line " + std::to_string(lineno) +
                                     ": bad count '" + fields[2] + "'");
        }
        if (count < 0)
            throw std::runtime_error("taxonomy: line " + std::to_string(lineno) +
                                     ": negative count");

        TaxonomyNode node;
        node.name = name;
        node.count = count;
        int idx = static_cast<int>(tax.nodes.size());
        tax.concept_index.emplace(name, idx);
        parent_names.push_back(fields[1]);
        for (const auto& w : detail::split_on(fields[3], ',')) {
            if (w.empty()) continue;
            tax.word_to_concept.emplace(w, idx);  // first mapping wins
        }
        tax.nodes.push_back(std::move(node));
    }
    if (tax.nodes.empty()) throw std::runtime_error("taxonomy: no concepts in " + path);

    for (size_t i = 0; i < tax.nodes.size(); ++i) {
        const std::string& pname = parent_names[i];
        if (pname == "-") {
            if (tax.root != -1)
                throw std::runtime_error("taxonomy: multiple roots ('" +
                                         tax.nodes[static_cast<size_t>(tax.root)].name +
                                         "' and '" + tax.nodes[i].name + "')");
            tax.root = static_cast<int>(i);
            continue;
        }
        auto it = tax.concept_index.find(pname);
        if (it == tax.concept_index.end())
            throw std::runtime_error("taxonomy: unknown parent '" + pname + "' of '" +
                                     tax.nodes[i].name + "'");
        tax.nodes[i].parent = it->second;
        tax.nodes[static_cast<size_t>(it->second)].children.push_back(static_cast<int>(i));
    }
    if (tax.root == -1) throw std::runtime_error("taxonomy: no root (parent '-') found");

    // Reachability doubles as the cycle check: a cycle never reaches the root.
    std::vector<char> seen(tax.nodes.size(), 0);
    std::vector<int> stack{tax.root};
    seen[static_cast<size_t>(tax.root)] = 1;
    size_t reached = 0;
    while (!stack.empty()) {
        int n = stack.back();
        stack.pop_back();
        ++reached;
        for (int c : tax.nodes[static_cast<size_t>(n)].children)
            if (!seen[static_cast<size_t>(c)]) {
                seen[static_cast<size_t>(c)] = 1;
                stack.push_back(c);
            }
    }
    if (reached != tax.nodes.size())
        for (size_t i = 0; i < tax.nodes.size(); ++i)
            if (!seen[i])
                throw std::runtime_error("taxonomy: concept '" + tax.nodes[i].name +
                                         "' unreachable from root");

    // Subtree counts bottom-up (children always have larger indices than their
    // position in a DFS finish order; use an explicit post-order).
    std::vector<int> order;
    order.reserve(tax.nodes.size());
    stack.assign(1, tax.root);
    while (!stack.empty()) {
        int n = stack.back();
        stack.pop_back();
        order.push_back(n);
        for (int c : tax.nodes[static_cast<size_t>(n)].children) stack.push_back(c);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto& node = tax.nodes[static_cast<size_t>(*it)];
        node.subtree = node.count;
        for (int c : node.children) node.subtree += tax.nodes[static_cast<size_t>(c)].subtree;
    }

    // Smoothing guards empty subtrees (and an all-zero file) against -ln(0).
    tax.total = std::max<long long>(tax.nodes[static_cast<size_t>(tax.root)].subtree, 1);
    for (auto& node : tax.nodes) {
        long long eff = std::max<long long>(node.subtree, 1);
        node.ic = -std::log(static_cast<double>(eff) / static_cast<double>(tax.total));
    }
    return tax;
}

// Information content of the concept a word maps to; OOV yields 0.
inline double word_ic(const Taxonomy& tax, const std::string& w) {
    auto it = tax.word_to_concept.find(w);
    if (it == tax.word_to_concept.end()) return 0.0;
    return tax.nodes[static_cast<size_t>(it->second)].ic;
}

// IC of the lowest common subsumer; 0 when either word is unknown or the
// subsumer is the root.
inline double resnik_similarity(const Taxonomy& tax, const std::string& w1,
                                const std::string& w2) {
    auto a = tax.word_to_concept.find(w1);
    auto b = tax.word_to_concept.find(w2);
    if (a == tax.word_to_concept.end() || b == tax.word_to_concept.end()) return 0.0;
    int lcs = detail::lowest_common_subsumer(tax, a->second, b->second);
    return tax.nodes[static_cast<size_t>(lcs)].ic;
}

namespace detail {

inline bool content_tag(const std::string& tag) {
    return tag.rfind("NN", 0) == 0 || tag.rfind("VB", 0) == 0 || tag.rfind("JJ", 0) == 0;
}

inline const std::unordered_set<std::string>& question_stopwords() {
    static const std::unordered_set<std::string> kStop{
        "what", "which", "where", "who",  "whom",   "whose", "when",  "why",
        "how",  "is",    "are",   "was",  "were",   "am",    "be",    "been",
        "being", "do",   "does",  "did",  "can",    "could", "will",  "would",
        "shall", "should", "may", "might", "must"};
    return kStop;
}

}  // namespace detail

// Keywords = content tokens of the question minus interrogatives/auxiliaries;
// the answer keeps response content tokens whose best similarity to any
// keyword strictly exceeds theta, in response order.
inline ParseResult baseline_wordnet_parse(const TokenSeq& question, const TokenSeq& response,
                                          const Taxonomy& tax, const PosTagger& tagger,
                                          double theta = 0.0) {
    std::vector<std::string> keywords;
    for (const auto& tok : question) {
        if (detail::question_stopwords().count(tok)) continue;
        if (detail::content_tag(tag_token(tok, tagger))) keywords.push_back(tok);
    }
    ParseResult result;
    for (const auto& tok : response) {
        if (!detail::content_tag(tag_token(tok, tagger))) continue;
        double best = 0.0;
        for (const auto& kw : keywords) best = std::max(best, resnik_similarity(tax, tok, kw));
        if (best > theta) result.tokens.push_back(tok);
    }
    result.no_match = result.tokens.empty();
    return result;
}

struct PosRule {
    std::vector<std::string> pattern;  // {"*"} = catch-all; 1 token = keyword;
                                       // several = question prefix
    std::unordered_set<std::string> tags;
};

using PosExpectationRules = std::vector<PosRule>;

// File format: keyword-or-prefix<TAB>TAG1,TAG2  — ordered, first match wins.
// A "*" pattern matches every question; at least one such rule is required.
inline PosExpectationRules load_pos_rules(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("pos rules: cannot open " + path);
    const auto& tagset = pos_tagset();

    PosExpectationRules rules;
    bool have_catch_all = false;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto fields = detail::split_on(line, '\t');
        if (fields.size() != 2)
            throw std::runtime_error("pos rules: line " + std::to_string(lineno) +
                                     ": expected 2 tab-separated fields");
        PosRule rule;
        for (const auto& t : detail::split_on(fields[0], ' '))
            if (!t.empty()) rule.pattern.push_back(t);
        if (rule.pattern.empty())
            throw std::runtime_error("pos rules: line " + std::to_string(lineno) +
                                     ": empty pattern");
        for (const auto& t : detail::split_on(fields[1], ',')) {
            if (t.empty()) continue;
            if (!tagset.count(t))
                throw std::runtime_error("pos rules: line " + std::to_string(lineno) +
                                         ": unknown tag '" + t + "'");
            rule.tags.insert(t);
        }
        if (rule.tags.empty())
            throw std::runtime_error("pos rules: line " + std::to_string(lineno) +
                                     ": no tags");
        if (rule.pattern.size() == 1 && rule.pattern[0] == "*") have_catch_all = true;
        rules.push_back(std::move(rule));
    }
    if (rules.empty()) throw std::runtime_error("pos rules: no rules in " + path);
    if (!have_catch_all)
        throw std::runtime_error("pos rules: missing catch-all '*' rule in " + path);
    return rules;
}

namespace detail {

inline bool rule_matches(const PosRule& rule, const TokenSeq& question) {
    if (rule.pattern.size() == 1) {
        if (rule.pattern[0] == "*") return true;
        for (const auto& tok : question)
            if (tok == rule.pattern[0]) return true;
        return false;
    }
    if (question.size() < rule.pattern.size()) return false;
    for (size_t i = 0; i < rule.pattern.size(); ++i)
        if (question[i] != rule.pattern[i]) return false;
    return true;
}

}  // namespace detail

// First matching rule fixes the expected tag set; the answer keeps response
// tokens bearing one of those tags, in order.
inline ParseResult baseline_pos_parse(const TokenSeq& question, const TokenSeq& response,
                                      const PosExpectationRules& rules,
                                      const PosTagger& tagger) {
    if (rules.empty()) throw std::runtime_error("pos rules: empty rule list");
    const PosRule* hit = nullptr;
    for (const auto& rule : rules)
        if (detail::rule_matches(rule, question)) {
            hit = &rule;
            break;
        }
    ParseResult result;
    if (!hit) {  // possible only with hand-built rule lists lacking a catch-all
        result.no_match = true;
        return result;
    }
    for (const auto& tok : response)
        if (hit->tags.count(tag_token(tok, tagger))) result.tokens.push_back(tok);
    result.no_match = result.tokens.empty();
    return result;
}

}  // namespace anspar
