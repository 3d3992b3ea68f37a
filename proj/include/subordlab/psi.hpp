#pragma once

#include <cmath>
#include <complex>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "subordlab/errors.hpp"
#include "subordlab/power_series.hpp"

namespace subordlab {

struct PsiParams {
    double beta = 0.0;
    double alpha = 0.0;
    int n = 0;
};

namespace expr {

enum class Var { R, S, T, Z };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    enum class Kind { Const, Variable, Add, Sub, Mul, Div, IPow } kind;
    cplx value{};    // Const
    Var var{};       // Variable
    int exponent{};  // IPow
    NodePtr lhs, rhs;
};

inline NodePtr constant(cplx c) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Const;
    n->value = c;
    return n;
}
inline NodePtr variable(Var v) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Variable;
    n->var = v;
    return n;
}
inline NodePtr binary(Node::Kind k, NodePtr a, NodePtr b) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}
inline NodePtr operator+(NodePtr a, NodePtr b) {
    return binary(Node::Kind::Add, std::move(a), std::move(b));
}
inline NodePtr operator-(NodePtr a, NodePtr b) {
    return binary(Node::Kind::Sub, std::move(a), std::move(b));
}
inline NodePtr operator*(NodePtr a, NodePtr b) {
    return binary(Node::Kind::Mul, std::move(a), std::move(b));
}
inline NodePtr operator/(NodePtr a, NodePtr b) {
    return binary(Node::Kind::Div, std::move(a), std::move(b));
}
/// Integer power by repeated multiplication; never via the complex log.
inline NodePtr ipow(NodePtr a, int e) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::IPow;
    n->exponent = e;
    n->lhs = std::move(a);
    return n;
}

inline cplx eval(const Node& n, cplx r, cplx s, cplx t, cplx z) {
    using K = Node::Kind;
    switch (n.kind) {
        case K::Const:
            return n.value;
        case K::Variable:
            switch (n.var) {
                case Var::R: return r;
                case Var::S: return s;
                case Var::T: return t;
                case Var::Z: return z;
            }
            return 0.0;
        case K::Add: return eval(*n.lhs, r, s, t, z) + eval(*n.rhs, r, s, t, z);
        case K::Sub: return eval(*n.lhs, r, s, t, z) - eval(*n.rhs, r, s, t, z);
        case K::Mul: return eval(*n.lhs, r, s, t, z) * eval(*n.rhs, r, s, t, z);
        case K::Div: {
            cplx den = eval(*n.rhs, r, s, t, z);
            if (den == cplx{0.0, 0.0})
                throw DivisionByZero("psi expression divided by zero");
            return eval(*n.lhs, r, s, t, z) / den;
        }
        case K::IPow: {
            cplx base = eval(*n.lhs, r, s, t, z);
            cplx acc = 1.0;
            for (int i = 0; i < n.exponent; ++i) acc *= base;
            return acc;
        }
    }
    return 0.0;
}

inline bool uses(const Node& n, Var v) {
    using K = Node::Kind;
    if (n.kind == K::Variable) return n.var == v;
    bool u = false;
    if (n.lhs) u = u || uses(*n.lhs, v);
    if (n.rhs) u = u || uses(*n.rhs, v);
    return u;
}

}  // namespace expr

/// One entry of the closed psi catalog. Immutable; evaluation is pure.
class PsiExpr {
public:
    PsiExpr(std::string id, PsiParams params, expr::NodePtr root)
        : id_(std::move(id)), params_(params), root_(std::move(root)) {}

    const std::string& id() const { return id_; }
    const PsiParams& params() const { return params_; }

    bool uses_t() const { return expr::uses(*root_, expr::Var::T); }

    cplx eval(cplx r, cplx s, cplx t = 0.0, cplx z = 0.0) const {
        return expr::eval(*root_, r, s, t, z);
    }

    cplx eval_jet(const Jet& j, cplx z = 0.0) const {
        return eval(j.value, j.zdp, j.z2ddp, z);
    }

private:
    std::string id_;
    PsiParams params_;
    expr::NodePtr root_;
};

/// Build a catalog entry by ID. The catalog is closed: the IDs below are
/// the stable CLI vocabulary.
///
///   E1: r+(1+2e)s       E2: 1+(1+sqrt2)e s   E3a: 1+s
///   E3b: r^2-r+(1+e)s+1 E3c: 1+s/r^2         E4: 1+s/r    E5: 2s+t
///   J1(n,b): 1+b s/r^n  J2(n,b): 1+b s/r^{n+1}
///   J3(a,b): (1-a)r+a r^2+b s   J4a(b): r+b s   J4b(b): r+b s/r
///   X1(n,b): 1+b s^n    X2(n,b): 1+b s/r^{n+1}  X3a(b): r+b s
///   X3b(b): r+b s/r     X4(n,b): r+b s/r^{n+1}
///   X5a(b): r+b s^2     X5b(b): r+b s^2/r       X5c(b): r+b s^2/r^2
///   X6a(b): r^2+b s     X6b(b): r^2+b s/r       X6c(b): r^2+b s/r^2
///   X7a(b): r+b rs      X7b(b): r^2+b rs        X7c(b): r^3+b rs
///   X8(b): r^2+r-1+b s
inline PsiExpr make_psi(const std::string& id, PsiParams p = {}) {
    using namespace expr;
    const double e = std::numbers::e;
    NodePtr r = variable(Var::R), s = variable(Var::S), t = variable(Var::T);
    auto c = [](double x) { return constant(cplx{x, 0.0}); };
    NodePtr b = c(p.beta);
    NodePtr root;

    if (id == "E1")
        root = r + c(1.0 + 2.0 * e) * s;
    else if (id == "E2")
        root = c(1.0) + c((1.0 + std::sqrt(2.0)) * e) * s;
    else if (id == "E3a")
        root = c(1.0) + s;
    else if (id == "E3b")
        root = ipow(r, 2) - r + c(1.0 + e) * s + c(1.0);
    else if (id == "E3c")
        root = c(1.0) + s / ipow(r, 2);
    else if (id == "E4")
        root = c(1.0) + s / r;
    else if (id == "E5")
        root = c(2.0) * s + t;
    else if (id == "J1")
        root = p.n == 0 ? c(1.0) + b * s : c(1.0) + b * s / ipow(r, p.n);
    else if (id == "J2" || id == "X2")
        root = c(1.0) + b * s / ipow(r, p.n + 1);
    else if (id == "J3")
        root = c(1.0 - p.alpha) * r + c(p.alpha) * ipow(r, 2) + b * s;
    else if (id == "J4a" || id == "X3a")
        root = r + b * s;
    else if (id == "J4b" || id == "X3b")
        root = r + b * s / r;
    else if (id == "X1")
        root = c(1.0) + b * ipow(s, p.n);
    else if (id == "X4")
        root = r + b * s / ipow(r, p.n + 1);
    else if (id == "X5a")
        root = r + b * ipow(s, 2);
    else if (id == "X5b")
        root = r + b * ipow(s, 2) / r;
    else if (id == "X5c")
        root = r + b * ipow(s, 2) / ipow(r, 2);
    else if (id == "X6a")
        root = ipow(r, 2) + b * s;
    else if (id == "X6b")
        root = ipow(r, 2) + b * s / r;
    else if (id == "X6c")
        root = ipow(r, 2) + b * s / ipow(r, 2);
    else if (id == "X7a")
        root = r + b * r * s;
    else if (id == "X7b")
        root = ipow(r, 2) + b * r * s;
    else if (id == "X7c")
        root = ipow(r, 3) + b * r * s;
    else if (id == "X8")
        root = ipow(r, 2) + r - c(1.0) + b * s;
    else
        throw UnknownTheorem("unknown psi id: " + id);

    return PsiExpr(id, p, std::move(root));
}

inline bool psi_takes_beta(const std::string& id) {
    return id[0] == 'J' || id[0] == 'X';
}

inline const std::vector<std::string>& psi_catalog_ids() {
    static const std::vector<std::string> ids = {
        "E1", "E2", "E3a", "E3b", "E3c", "E4",  "E5",  "J1",  "J2",  "J3",
        "J4a", "J4b", "X1", "X2",  "X3a", "X3b", "X4",  "X5a", "X5b", "X5c",
        "X6a", "X6b", "X6c", "X7a", "X7b", "X7c", "X8"};
    return ids;
}

}  // namespace subordlab
