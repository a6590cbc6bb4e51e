#pragma once
// Internal: collects RelationReports for one suite cell.

#include "qbrauer/diagram.hpp"
#include "qbrauer/report.hpp"
#include "qbrauer/verify.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace qbrauer::detail {

template <class T>
std::size_t residual_count(const RingMatrix<T>& m) { return m.nonzeros(); }
template <class T>
std::string residual_text(const RingMatrix<T>& m) { return sample_entries(m, 3); }

template <class T>
std::size_t residual_count(const DiagramElement<T>& x) { return x.terms().size(); }
template <class T>
std::string residual_text(const DiagramElement<T>& x) {
    std::string out;
    std::size_t shown = 0;
    for (const auto& [d, c] : x.terms()) {
        if (shown++ == 3) break;
        if (!out.empty()) out += "; ";
        out += "[" + d.to_string() + "]=" + to_string(c);
    }
    return out;
}

/// "base[i=1,j=3]"
inline std::string indexed(std::string base, std::initializer_list<std::pair<const char*, int>> idx) {
    if (idx.size() == 0) return base;
    base += '[';
    bool first = true;
    for (const auto& [name, v] : idx) {
        if (!first) base += ',';
        first = false;
        base += name;
        base += '=' + std::to_string(v);
    }
    return base + ']';
}

class Checker {
public:
    Checker(SuiteId suite, int n, int l, std::string specialization = {})
        : suite_(suite_name(suite)), n_(n), l_(l), spec_(std::move(specialization)) {}

    void set_specialization(std::string s) { spec_ = std::move(s); }

    template <class M>
    bool zero(std::string id, const M& residual, std::string note = {}) {
        RelationReport r = base(std::move(id));
        r.residual_nonzeros = residual_count(residual);
        r.verdict = r.residual_nonzeros == 0 ? Verdict::pass : Verdict::fail;
        r.residual_sample = residual_text(residual);
        r.note = std::move(note);
        out_.push_back(std::move(r));
        return out_.back().verdict == Verdict::pass;
    }

    template <class M>
    bool equal(std::string id, const M& lhs, const M& rhs, std::string note = {}) {
        return zero(std::move(id), lhs - rhs, std::move(note));
    }

    /// Records whether `residual` vanishes without asserting that it should.
    template <class M>
    void observe(std::string id, const M& residual, std::string note) {
        RelationReport r = base(std::move(id));
        r.verdict = Verdict::observed;
        r.residual_nonzeros = residual_count(residual);
        r.residual_sample = residual_text(residual);
        r.note = std::move(note);
        out_.push_back(std::move(r));
    }

    void skip(std::string id, std::string reason) {
        RelationReport r = base(std::move(id));
        r.verdict = Verdict::skipped;
        r.note = std::move(reason);
        out_.push_back(std::move(r));
    }

    /// Integer-valued check, e.g. a dimension or a count.
    bool scalar(std::string id, long long actual, long long expected, std::string note = {}) {
        RelationReport r = base(std::move(id));
        r.residual_nonzeros = actual == expected ? 0 : 1;
        r.verdict = actual == expected ? Verdict::pass : Verdict::fail;
        if (actual != expected) r.residual_sample = "actual=" + std::to_string(actual) + " expected=" + std::to_string(expected);
        r.note = std::move(note);
        out_.push_back(std::move(r));
        return out_.back().verdict == Verdict::pass;
    }

    void push(RelationReport r) { out_.push_back(std::move(r)); }

    std::vector<RelationReport> take() { return std::move(out_); }

private:
    RelationReport base(std::string id) const {
        RelationReport r;
        r.suite = std::string(suite_);
        r.relation_id = std::move(id);
        r.n = n_;
        r.l = l_;
        r.specialization = spec_;
        return r;
    }

    std::string_view suite_;
    int n_;
    int l_;
    std::string spec_;
    std::vector<RelationReport> out_;
};

/// Generic checks of the Brauer presentations over any algebra given by
/// generator images. Ops supplies sigma(i), e(i), one(), mul(a, b) and
/// eta_times(a).
template <class Ops>
void full_presentation(Checker& c, int l, const Ops& ops, const std::string& prefix) {
    auto m = [&](const auto& a, const auto& b) { return ops.mul(a, b); };
    for (int i = 1; i <= l - 1; ++i) {
        const auto s = ops.sigma(i);
        const auto e = ops.e(i);
        c.equal(indexed(prefix + "sigma_squared", {{"i", i}}), m(s, s), ops.one());
        c.equal(indexed(prefix + "e_squared", {{"i", i}}), m(e, e), ops.eta_times(e));
        c.equal(indexed(prefix + "sigma_e", {{"i", i}}), m(s, e), e);
        c.equal(indexed(prefix + "e_sigma", {{"i", i}}), m(e, s), e);
    }
    for (int i = 1; i <= l - 1; ++i)
        for (int j = i + 2; j <= l - 1; ++j) {
            const auto si = ops.sigma(i), sj = ops.sigma(j), ei = ops.e(i), ej = ops.e(j);
            c.equal(indexed(prefix + "sigma_sigma_commute", {{"i", i}, {"j", j}}), m(si, sj), m(sj, si));
            c.equal(indexed(prefix + "sigma_e_commute", {{"i", i}, {"j", j}}), m(si, ej), m(ej, si));
            c.equal(indexed(prefix + "e_sigma_commute", {{"i", i}, {"j", j}}), m(ei, sj), m(sj, ei));
            c.equal(indexed(prefix + "e_e_commute", {{"i", i}, {"j", j}}), m(ei, ej), m(ej, ei));
        }
    for (int i = 1; i + 1 <= l - 1; ++i) {
        const auto s = ops.sigma(i), t = ops.sigma(i + 1), e = ops.e(i), f = ops.e(i + 1);
        c.equal(indexed(prefix + "braid", {{"i", i}}), m(m(s, t), s), m(m(t, s), t));
        c.equal(indexed(prefix + "e_f_e", {{"i", i}}), m(m(e, f), e), e);
        c.equal(indexed(prefix + "f_e_f", {{"i", i}}), m(m(f, e), f), f);
        c.equal(indexed(prefix + "sigma_f_e", {{"i", i}}), m(m(s, f), e), m(t, e));
        c.equal(indexed(prefix + "f_e_sigma", {{"i", i}}), m(m(f, e), t), m(f, s));
    }
}

/// The presentation with sigma_1..sigma_{l-1} and the single e_{l-1}, for
/// l >= 3; the tau relation and the equivalence checks need l >= 4.
template <class Ops>
void reduced_presentation(Checker& c, int l, const Ops& ops, const std::string& prefix) {
    auto m = [&](const auto& a, const auto& b) { return ops.mul(a, b); };
    const int k = l - 1;
    const auto ek = ops.e(k);
    for (int i = 1; i <= k; ++i) {
        const auto s = ops.sigma(i);
        c.equal(indexed(prefix + "sigma_squared", {{"i", i}}), m(s, s), ops.one());
    }
    for (int i = 1; i + 1 <= k; ++i) {
        const auto s = ops.sigma(i), t = ops.sigma(i + 1);
        c.equal(indexed(prefix + "braid", {{"i", i}}), m(m(s, t), s), m(m(t, s), t));
    }
    for (int i = 1; i <= k; ++i)
        for (int j = i + 2; j <= k; ++j) {
            const auto si = ops.sigma(i), sj = ops.sigma(j);
            c.equal(indexed(prefix + "sigma_sigma_commute", {{"i", i}, {"j", j}}), m(si, sj), m(sj, si));
        }
    c.equal(prefix + "e_squared", m(ek, ek), ops.eta_times(ek));
    c.equal(prefix + "sigma_e", m(ops.sigma(k), ek), ek);
    c.equal(prefix + "e_sigma", m(ek, ops.sigma(k)), ek);
    const auto skm1 = ops.sigma(k - 1);
    c.equal(prefix + "e_sigma_e", m(m(ek, skm1), ek), ek);
    for (int i = 1; i <= k - 2; ++i) {
        const auto s = ops.sigma(i);
        c.equal(indexed(prefix + "sigma_e_commute", {{"i", i}}), m(s, ek), m(ek, s));
    }
    const std::string need = "needs l >= 4";
    if (l < 4) {
        for (const char* id : {"sigma_e_commute", "tau_relation", "tau_involution", "tau_conjugates_e", "e_km2_e_commute",
                               "tau_relation_equivalent"})
            c.skip(prefix + id, need);
        return;
    }
    const auto tau = m(m(m(ops.sigma(k - 1), ops.sigma(k - 2)), ops.sigma(k)), ops.sigma(k - 1));
    const auto ektau = m(ek, tau);
    const auto tauek = m(tau, ek);
    c.equal(prefix + "tau_relation", m(ektau, ektau), m(tauek, tauek));
    c.equal(prefix + "tau_involution", m(tau, tau), ops.one());
    // e_{k-2} as the conjugate of e_k by tau.
    const auto ekm2 = m(m(tau, ek), tau);
    c.equal(prefix + "tau_conjugates_e", ekm2, ops.e(k - 2));
    c.equal(prefix + "e_km2_e_commute", m(ekm2, ek), m(ek, ekm2));
    // With tau^2 = 1, e_k tau e_k tau - tau e_k tau e_k = e_k e_{k-2} - e_{k-2} e_k.
    c.equal(prefix + "tau_relation_equivalent", m(ektau, ektau) - m(tauek, tauek), m(ek, ekm2) - m(ekm2, ek));
}

}  // namespace qbrauer::detail
