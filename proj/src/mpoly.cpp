#include "redpair/mpoly.hpp"

#include <cassert>
#include <stdexcept>

namespace redpair {

std::string LinForm::pretty(const std::string& var) const {
    std::string s;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Int a = c_[i];
        if (first) {
            if (a == -1)
                s += "-";
            else if (a != 1)
                s += a.str() + "*";
        } else {
            s += (a > 0) ? "+" : "-";
            Int m = a > 0 ? a : Int(-a);
            if (m != 1) s += m.str() + "*";
        }
        s += var + std::to_string(i + 1);
        first = false;
    }
    return first ? "0" : s;
}

MPoly MPoly::constant(size_t nvars, const Rat& c) {
    MPoly p(nvars);
    if (c != 0) p.t_[Exps(nvars, 0)] = c;
    return p;
}

MPoly MPoly::monomial(size_t nvars, const Exps& e, const Rat& c) {
    assert(e.size() == nvars);
    MPoly p(nvars);
    if (c != 0) p.t_[e] = c;
    return p;
}

MPoly MPoly::variable(size_t nvars, size_t index) {
    Exps e(nvars, 0);
    e[index] = 1;
    return monomial(nvars, e, 1);
}

MPoly MPoly::from_linform(const LinForm& g) {
    MPoly p(g.rank());
    for (size_t i = 0; i < g.rank(); ++i) {
        if (g[i] == 0) continue;
        Exps e(g.rank(), 0);
        e[i] = 1;
        p.t_[e] = Rat(g[i]);
    }
    return p;
}

bool MPoly::is_constant() const {
    if (t_.empty()) return true;
    return t_.size() == 1 && t_.begin()->first == Exps(nvars_, 0);
}

Rat MPoly::constant_value() const {
    auto it = t_.find(Exps(nvars_, 0));
    return it == t_.end() ? Rat(0) : it->second;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : t_) {
        int s = 0;
        for (int x : e) s += x;
        if (s > d) d = s;
    }
    return d;
}

void MPoly::add_term(const Exps& e, const Rat& c) {
    if (c == 0) return;
    assert(e.size() == nvars_);
    auto [it, inserted] = t_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

MPoly MPoly::operator-() const { return scaled(Rat(-1)); }

MPoly operator+(const MPoly& a, const MPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("mpoly: mixed variable counts");
    MPoly r = a;
    for (const auto& [e, c] : b.t_) r.add_term(e, c);
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("mpoly: mixed variable counts");
    MPoly r(a.nvars_);
    MPoly::Exps e(a.nvars_);
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MPoly MPoly::scaled(const Rat& c) const {
    MPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, v] : t_) r.t_[e] = v * c;
    return r;
}

MPoly MPoly::pow(int n) const {
    assert(n >= 0);
    MPoly r = constant(nvars_, 1);
    for (int i = 0; i < n; ++i) r = r * (*this);
    return r;
}

Rat MPoly::eval(const VecQ& x) const {
    assert(x.size() == nvars_);
    Rat s = 0;
    for (const auto& [e, c] : t_) {
        Rat m = c;
        for (size_t i = 0; i < nvars_; ++i)
            for (int j = 0; j < e[i]; ++j) m *= x[i];
        s += m;
    }
    return s;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
    assert(images.size() == nvars_);
    size_t out_vars = images.empty() ? 0 : images[0].nvars();
    MPoly r(out_vars);
    for (const auto& [e, c] : t_) {
        MPoly m = MPoly::constant(out_vars, c);
        for (size_t i = 0; i < nvars_; ++i)
            if (e[i] > 0) m = m * images[i].pow(e[i]);
        r = r + m;
    }
    return r;
}

MPoly MPoly::derivative(size_t var) const {
    MPoly r(nvars_);
    for (const auto& [e, c] : t_) {
        if (e[var] == 0) continue;
        Exps d = e;
        d[var] -= 1;
        r.add_term(d, c * e[var]);
    }
    return r;
}

std::string MPoly::pretty(const std::string& var) const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : t_) {
        std::string mono;
        for (size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        Rat a = c;
        if (first) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (mono.empty())
            s += rat_str(a);
        else if (a == 1)
            s += mono;
        else
            s += rat_str(a) + "*" + mono;
        first = false;
    }
    return s;
}

}  // namespace redpair
