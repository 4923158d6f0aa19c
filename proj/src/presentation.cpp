#include "braidlab/presentation.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "braidlab/errors.hpp"
#include "braidlab/linalg.hpp"

namespace braidlab {

namespace {

WordLess word_less;

long checked_word_count(int gens, int length) {
    long count = 1;
    for (int i = 0; i < length; ++i) {
        count *= gens;
        if (count > (1L << 22)) throw DegreeOverflow(length);
    }
    return count;
}

Word word_from_index(long idx, int gens, int length) {
    Word w(static_cast<size_t>(length));
    for (int t = length - 1; t >= 0; --t) {
        w[static_cast<size_t>(t)] = static_cast<uint8_t>(idx % gens);
        idx /= gens;
    }
    return w;
}

long word_to_index(const Word& w, int gens) {
    long idx = 0;
    for (uint8_t g : w) idx = idx * gens + g;
    return idx;
}

} // namespace

Presentation::Presentation(std::vector<Generator> gens, std::vector<RewriteRule> rules)
    : gens_(std::move(gens)) {
    assert(gens_.size() <= 255);
    for (auto& rule : rules) {
        if (rule.lead.size() != 2)
            throw NonOrientable("rule lead must be a length-2 word");
        if (rules_.count(rule.lead))
            throw NonOrientable("duplicate rule lead " + word_to_string(rule.lead, generator_names()));
        if (rule.tail.degree() > 2)
            throw NonOrientable("rule tail exceeds degree 2");
        int lead_parity = word_parity(rule.lead);
        for (const auto& [w, c] : rule.tail.terms()) {
            if (!word_less(w, rule.lead))
                throw NonOrientable("tail term " + word_to_string(w, generator_names()) +
                                    " does not precede lead " +
                                    word_to_string(rule.lead, generator_names()));
            if (word_parity(w) != lead_parity)
                throw NonOrientable("rule is not parity-homogeneous");
        }
        rules_.emplace(rule.lead, std::move(rule.tail));
    }
}

std::vector<std::string> Presentation::generator_names() const {
    std::vector<std::string> names;
    names.reserve(gens_.size());
    for (const auto& g : gens_) names.push_back(g.name);
    return names;
}

int Presentation::generator_index(const std::string& name) const {
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return static_cast<int>(i);
    return -1;
}

int Presentation::word_parity(const Word& w) const {
    int p = 0;
    for (uint8_t g : w) p ^= gens_.at(g).parity & 1;
    return p;
}

const NCPolynomial* Presentation::rule_for(const Word& lead) const {
    auto it = rules_.find(lead);
    return it == rules_.end() ? nullptr : &it->second;
}

nlohmann::ordered_json Presentation::to_json() const {
    nlohmann::ordered_json j;
    auto gens = nlohmann::ordered_json::array();
    for (const auto& g : gens_) {
        nlohmann::ordered_json e;
        e["name"] = g.name;
        e["parity"] = g.parity;
        gens.push_back(std::move(e));
    }
    j["generators"] = std::move(gens);
    auto rules = nlohmann::ordered_json::array();
    auto names = generator_names();
    for (const auto& [lead, tail] : rules_) {
        nlohmann::ordered_json r;
        auto lw = nlohmann::ordered_json::array();
        for (uint8_t g : lead) lw.push_back(names[g]);
        r["lead"] = std::move(lw);
        auto terms = nlohmann::ordered_json::array();
        for (const auto& [w, c] : tail.terms()) {
            nlohmann::ordered_json t;
            auto tw = nlohmann::ordered_json::array();
            for (uint8_t g : w) tw.push_back(names[g]);
            t["word"] = std::move(tw);
            t["coeff"] = c.to_string();
            terms.push_back(std::move(t));
        }
        r["tail"] = std::move(terms);
        rules.push_back(std::move(r));
    }
    j["rules"] = std::move(rules);
    return j;
}

Presentation Presentation::from_json(const nlohmann::json& j) {
    std::vector<Generator> gens;
    std::map<std::string, int> index;
    for (const auto& g : j.at("generators")) {
        Generator gen{g.at("name").get<std::string>(), g.at("parity").get<int>()};
        index[gen.name] = static_cast<int>(gens.size());
        gens.push_back(std::move(gen));
    }
    auto to_word = [&](const nlohmann::json& arr) {
        Word w;
        for (const auto& s : arr) {
            auto it = index.find(s.get<std::string>());
            if (it == index.end()) throw ParseError("unknown generator " + s.get<std::string>());
            w.push_back(static_cast<uint8_t>(it->second));
        }
        return w;
    };
    std::vector<RewriteRule> rules;
    for (const auto& r : j.at("rules")) {
        RewriteRule rule;
        rule.lead = to_word(r.at("lead"));
        for (const auto& t : r.at("tail"))
            rule.tail +=
                NCPolynomial::term(to_word(t.at("word")), Scalar::parse(t.at("coeff").get<std::string>()));
        rules.push_back(std::move(rule));
    }
    return Presentation(std::move(gens), std::move(rules));
}

// ------------------------------------------------------------ normal form

namespace {

// Returns the leftmost reducible position in w, or -1.
int leftmost_redex(const Word& w, const Presentation& pres) {
    if (w.size() < 2) return -1;
    Word probe(2);
    for (size_t p = 0; p + 1 < w.size(); ++p) {
        probe[0] = w[p];
        probe[1] = w[p + 1];
        if (pres.rule_for(probe)) return static_cast<int>(p);
    }
    return -1;
}

void expand_redex(const Word& w, int pos, const Scalar& coeff, const Presentation& pres,
                  std::map<Word, Scalar, WordLess>& into) {
    Word probe{w[static_cast<size_t>(pos)], w[static_cast<size_t>(pos) + 1]};
    const NCPolynomial* tail = pres.rule_for(probe);
    assert(tail);
    Word prefix(w.begin(), w.begin() + pos);
    Word suffix(w.begin() + pos + 2, w.end());
    for (const auto& [tw, tc] : tail->terms()) {
        Word nw = prefix;
        nw.insert(nw.end(), tw.begin(), tw.end());
        nw.insert(nw.end(), suffix.begin(), suffix.end());
        auto it = into.find(nw);
        if (it == into.end()) {
            Scalar v = coeff * tc;
            if (!v.is_zero()) into.emplace(std::move(nw), std::move(v));
        } else {
            it->second += coeff * tc;
            if (it->second.is_zero()) into.erase(it);
        }
    }
}

} // namespace

NCPolynomial normal_form(const NCPolynomial& p, const Presentation& pres, int degree_cap) {
    std::map<Word, Scalar, WordLess> work;
    for (const auto& [w, c] : p.terms()) {
        if (static_cast<int>(w.size()) > degree_cap) throw DegreeOverflow(degree_cap);
        work.emplace(w, c);
    }
    NCPolynomial out;
    while (!work.empty()) {
        auto it = std::prev(work.end());
        Word w = it->first;
        Scalar c = it->second;
        work.erase(it);
        int pos = leftmost_redex(w, pres);
        if (pos < 0) {
            out.add_term(w, c);
        } else {
            expand_redex(w, pos, c, pres, work);
        }
    }
    return out;
}

namespace {

// Alternative strategy for the confluence cross-check: always rewrites the
// smallest reducible term at its rightmost redex.
NCPolynomial normal_form_alt(const NCPolynomial& p, const Presentation& pres) {
    std::map<Word, Scalar, WordLess> work(p.terms().begin(), p.terms().end());
    NCPolynomial out;
    while (!work.empty()) {
        auto it = work.begin();
        Word w = it->first;
        Scalar c = it->second;
        work.erase(it);
        int pos = -1;
        if (w.size() >= 2) {
            Word probe(2);
            for (int p2 = static_cast<int>(w.size()) - 2; p2 >= 0; --p2) {
                probe[0] = w[static_cast<size_t>(p2)];
                probe[1] = w[static_cast<size_t>(p2) + 1];
                if (pres.rule_for(probe)) {
                    pos = p2;
                    break;
                }
            }
        }
        if (pos < 0) {
            out.add_term(w, c);
        } else {
            expand_redex(w, pos, c, pres, work);
        }
    }
    return out;
}

} // namespace

// ------------------------------------------------------- graded dimensions

std::vector<long> hilbert_dims(const Presentation& pres, int max_degree) {
    int g = pres.generator_count();
    std::vector<long> dims;
    dims.push_back(1);
    if (max_degree >= 1) dims.push_back(g);

    // Quadratic parts of the rules span the degree-2 relation space.
    std::vector<NCPolynomial> quad;
    for (const auto& [lead, tail] : pres.rules()) {
        NCPolynomial rel = NCPolynomial::term(lead, Scalar(1)) - tail.graded_part(2);
        quad.push_back(std::move(rel));
    }

    for (int d = 2; d <= max_degree; ++d) {
        long words = checked_word_count(g, d);
        std::vector<SparseRow> rows;
        for (const auto& rel : quad) {
            for (int left = 0; left + 2 <= d; ++left) {
                int right = d - 2 - left;
                long nleft = checked_word_count(g, left);
                long nright = checked_word_count(g, right);
                for (long li = 0; li < nleft; ++li) {
                    Word lw = word_from_index(li, g, left);
                    for (long ri = 0; ri < nright; ++ri) {
                        Word rw = word_from_index(ri, g, right);
                        SparseRow row;
                        for (const auto& [w, c] : rel.terms()) {
                            Word full = lw;
                            full.insert(full.end(), w.begin(), w.end());
                            full.insert(full.end(), rw.begin(), rw.end());
                            row[static_cast<int>(word_to_index(full, g))] = c;
                        }
                        rows.push_back(std::move(row));
                    }
                }
            }
        }
        dims.push_back(words - sparse_rank(rows));
    }
    return dims;
}

int overlap_dimension(const Presentation& pres) {
    int g = pres.generator_count();
    // Independent basis of the quadratic relation space I.
    RowEchelon basis(/*reduced=*/false);
    std::vector<SparseRow> ivecs;
    for (const auto& [lead, tail] : pres.rules()) {
        NCPolynomial rel = NCPolynomial::term(lead, Scalar(1)) - tail.graded_part(2);
        SparseRow row;
        for (const auto& [w, c] : rel.terms())
            row[static_cast<int>(word_to_index(w, g))] = c;
        if (basis.add_row(row)) ivecs.push_back(std::move(row));
    }
    int r = static_cast<int>(ivecs.size());

    // Rows of I (x) V and V (x) I in the degree-3 word space.
    std::vector<SparseRow> stacked;
    for (const auto& vec : ivecs) {
        for (int k = 0; k < g; ++k) {
            SparseRow right, left;
            for (const auto& [col, c] : vec) {
                right[col * g + k] = c;           // w k
                left[k * g * g + col] = c;        // k w
            }
            stacked.push_back(std::move(right));
            stacked.push_back(std::move(left));
        }
    }
    int total = sparse_rank(stacked);
    return 2 * r * g - total;
}

std::vector<std::pair<std::string, NCPolynomial>> centrality_residual(
    const NCPolynomial& z, const Presentation& pres, int degree_cap) {
    std::vector<std::pair<std::string, NCPolynomial>> out;
    for (int i = 0; i < pres.generator_count(); ++i) {
        NCPolynomial gen = NCPolynomial::generator(i);
        NCPolynomial res = normal_form(z * gen - gen * z, pres, degree_cap);
        out.emplace_back(pres.generators()[static_cast<size_t>(i)].name, std::move(res));
    }
    return out;
}

Report confluence_check(Presentation& pres, int degree) {
    Report rep;
    rep.command = "confluence";
    rep.inputs["degree"] = degree;
    auto names = pres.generator_names();
    bool ok = true;

    for (const auto& [lead1, tail1] : pres.rules()) {
        for (const auto& [lead2, tail2] : pres.rules()) {
            if (lead1[1] != lead2[0]) continue;
            // Overlap word lead1[0] lead1[1] lead2[1].
            NCPolynomial via_left = tail1 * NCPolynomial::generator(lead2[1]);
            NCPolynomial via_right = NCPolynomial::generator(lead1[0]) * tail2;
            NCPolynomial diff =
                normal_form(via_left, pres, kDefaultDegreeCap) - normal_form(via_right, pres, kDefaultDegreeCap);
            if (!diff.is_zero()) {
                ok = false;
                Word overlap{lead1[0], lead1[1], lead2[1]};
                rep.detail("unresolved_overlap", word_to_string(overlap, names));
                rep.detail("difference", diff.to_string(names));
            }
        }
    }

    // Strategy cross-check on all short words when the algebra is small.
    if (ok && pres.generator_count() <= 6) {
        int g = pres.generator_count();
        int limit = std::min(degree, 4);
        for (int d = 2; d <= limit && ok; ++d) {
            long count = checked_word_count(g, d);
            for (long i = 0; i < count && ok; ++i) {
                NCPolynomial p = NCPolynomial::term(word_from_index(i, g, d), Scalar(1));
                if (normal_form(p, pres, kDefaultDegreeCap) != normal_form_alt(p, pres)) {
                    ok = false;
                    rep.detail("strategy_mismatch", word_to_string(word_from_index(i, g, d), names));
                }
            }
        }
    }

    rep.set_pass(ok);
    if (ok) {
        pres.set_max_verified_degree(degree);
        rep.detail("verified_degree", std::to_string(degree));
    }
    return rep;
}

// ------------------------------------------------------------ orientation

Presentation orient_relations(std::vector<Generator> gens,
                              const std::vector<NCPolynomial>& relations) {
    int g = static_cast<int>(gens.size());
    // Column 0 is the greatest degree-2 word; lower degrees follow.
    auto column_of = [&](const Word& w) -> int {
        if (w.size() == 2) return static_cast<int>(g * g - 1 - word_to_index(w, g));
        if (w.size() == 1) return g * g + (g - 1 - w[0]);
        return g * g + g;
    };
    auto word_of = [&](int col) -> Word {
        if (col < g * g) return word_from_index(g * g - 1 - col, g, 2);
        if (col < g * g + g) return Word{static_cast<uint8_t>(g - 1 - (col - g * g))};
        return Word{};
    };

    RowEchelon ech(/*reduced=*/true);
    for (const auto& rel : relations) {
        if (rel.degree() > 2) throw NonOrientable("relation exceeds degree 2");
        SparseRow row;
        for (const auto& [w, c] : rel.terms()) row[column_of(w)] = c;
        ech.add_row(std::move(row));
    }

    std::vector<RewriteRule> rules;
    for (const auto& [pivot, row] : ech.pivot_rows()) {
        Word lead = word_of(pivot);
        if (lead.size() != 2) {
            std::vector<std::string> names;
            for (const auto& gen : gens) names.push_back(gen.name);
            throw NonOrientable("independent relation led by low-degree word " +
                                word_to_string(lead, names));
        }
        RewriteRule rule;
        rule.lead = lead;
        for (const auto& [col, c] : row) {
            if (col == pivot) continue;
            rule.tail.add_term(word_of(col), -c);
        }
        rules.push_back(std::move(rule));
    }
    return Presentation(std::move(gens), std::move(rules));
}

// --------------------------------------------------------------- fixtures

Presentation supercommutative_presentation(std::vector<Generator> gens) {
    std::vector<RewriteRule> rules;
    int g = static_cast<int>(gens.size());
    for (int i = 0; i < g; ++i) {
        if (gens[static_cast<size_t>(i)].parity % 2)
            rules.push_back({Word{static_cast<uint8_t>(i), static_cast<uint8_t>(i)}, NCPolynomial()});
        for (int j = 0; j < i; ++j) {
            int sign = (gens[static_cast<size_t>(i)].parity * gens[static_cast<size_t>(j)].parity) % 2 ? -1 : 1;
            RewriteRule rule;
            rule.lead = Word{static_cast<uint8_t>(i), static_cast<uint8_t>(j)};
            rule.tail = NCPolynomial::term(Word{static_cast<uint8_t>(j), static_cast<uint8_t>(i)},
                                           Scalar(sign));
            rules.push_back(std::move(rule));
        }
    }
    return Presentation(std::move(gens), std::move(rules));
}

Presentation deformed_sl2_presentation(const Scalar& a, const Scalar& b, const Scalar& c) {
    std::vector<Generator> gens{{"x", 0}, {"h", 0}, {"y", 0}};
    Scalar q = Scalar::q();
    Scalar q2 = q * q;
    std::vector<RewriteRule> rules;
    {
        // q^2 h x - x h = A x
        RewriteRule r;
        r.lead = {1, 0};
        r.tail = NCPolynomial::term({0, 1}, q2.inverse()) + NCPolynomial::term({0}, a / q2);
        rules.push_back(std::move(r));
    }
    {
        // q^2 y h - h y = B y
        RewriteRule r;
        r.lead = {2, 1};
        r.tail = NCPolynomial::term({1, 2}, q2.inverse()) + NCPolynomial::term({2}, b / q2);
        rules.push_back(std::move(r));
    }
    {
        // (q^2+1)(x y - y x) + (q^2-1) h^2 = C h
        RewriteRule r;
        Scalar d = q2 + Scalar(1);
        r.lead = {2, 0};
        r.tail = NCPolynomial::term({0, 2}, Scalar(1)) +
                 NCPolynomial::term({1, 1}, (q2 - Scalar(1)) / d) +
                 NCPolynomial::term({1}, -(c / d));
        rules.push_back(std::move(r));
    }
    return Presentation(std::move(gens), std::move(rules));
}

Presentation twisted_sl2_presentation(const Scalar& a, const Scalar& b, const Scalar& c,
                                      const Scalar& d, const Scalar& nu) {
    std::vector<Generator> gens{{"x", 0}, {"h", 0}, {"y", 0}};
    std::vector<RewriteRule> rules;
    {
        // (1 - nu a) h x = (1 + nu b) x h
        RewriteRule r;
        r.lead = {1, 0};
        r.tail = NCPolynomial::term({0, 1}, (Scalar(1) + nu * b) / (Scalar(1) - nu * a));
        rules.push_back(std::move(r));
    }
    {
        // (1 - nu d) y h = (1 + nu c) h y
        RewriteRule r;
        r.lead = {2, 1};
        r.tail = NCPolynomial::term({1, 2}, (Scalar(1) + nu * c) / (Scalar(1) - nu * d));
        rules.push_back(std::move(r));
    }
    {
        // x y - y x = nu h^2
        RewriteRule r;
        r.lead = {2, 0};
        r.tail = NCPolynomial::term({0, 2}, Scalar(1)) + NCPolynomial::term({1, 1}, -nu);
        rules.push_back(std::move(r));
    }
    return Presentation(std::move(gens), std::move(rules));
}

Presentation sl11_enveloping_presentation() {
    std::vector<Generator> gens{{"h", 0}, {"b", 1}, {"c", 1}};
    std::vector<RewriteRule> rules;
    rules.push_back({Word{1, 0}, NCPolynomial::term({0, 1}, Scalar(1))});  // b h -> h b
    rules.push_back({Word{2, 0}, NCPolynomial::term({0, 2}, Scalar(1))});  // c h -> h c
    rules.push_back({Word{2, 1},
                     NCPolynomial::term({1, 2}, Scalar(-1)) + NCPolynomial::term({0}, Scalar(-1))});
    rules.push_back({Word{1, 1}, NCPolynomial()});  // b^2 -> 0
    rules.push_back({Word{2, 2}, NCPolynomial()});  // c^2 -> 0
    return Presentation(std::move(gens), std::move(rules));
}

} // namespace braidlab
