#include "fracsolve/problem/library.hpp"

#include <utility>

#include "fracsolve/error.hpp"

namespace fracsolve {

namespace {

// Replaces every {name} placeholder with the 17-digit decimal form of its value.
std::string bind(std::string text, std::initializer_list<std::pair<std::string_view, double>> params) {
    for (const auto& [name, value] : params) {
        const std::string key = "{" + std::string(name) + "}";
        const std::string replacement = "(" + format_number(value) + ")";
        for (std::size_t at = text.find(key); at != std::string::npos; at = text.find(key, at + replacement.size()))
            text.replace(at, key.size(), replacement);
    }
    return text;
}

// Source term that makes cos(pi x) + t^nu / Gamma(1+nu) an exact solution.
// Term by term: -a u_xx - K*(b u_xx), the advection d u_x, -f(u_exact), and
// the Caputo derivatives of (1+t) u, u/2 and (1+t^2) u/2.
constexpr const char* kExample91Source =
    "pi^2*(cos(pi*x/4) + t + 3*t^(2/3)*sin(pi*x)/2 + t*pi/(3*sin(pi/3)))*cos(pi*x)"
    " - x*t*sin((cos(pi*x) + t^{nu}/gamma(1+{nu}))^2)"
    " - (x+t)*pi*sin(pi*x)"
    " + 1 + t^(1-{nu})*cos(pi*x)/gamma(2-{nu}) + (1+{nu})*t"
    " + t^({nu}-{nu1})/(2*gamma(1+{nu}-{nu1}))"
    " - (1/2)*(t^({nu}-{mu1})/gamma(1+{nu}-{mu1})"
    " + 2*t^(2-{mu1})*cos(pi*x)/gamma(3-{mu1})"
    " + (2+{nu})*(1+{nu})*t^(2+{nu}-{mu1})/gamma(3+{nu}-{mu1}))";

ProblemSpec example_base() {
    ProblemSpec p;
    p.diffusion = Expr::parse("cos(pi*x/4) + t");
    p.advection = Expr::parse("x + t");
    p.memory_coeff = Expr::parse("t^(1/3) + sin(pi*x)");
    p.kernel = MemoryKernel{true, 1.0 / 3.0, 1.0};
    p.initial = Expr::parse("cos(pi*x)");
    p.left = BoundaryCondition{1.0, 0.0, Expr::constant(0.0)};
    p.right = BoundaryCondition{1.0, 0.0, Expr::constant(0.0)};
    p.length = 1.0;
    p.horizon = 1.0;
    return p;
}

}  // namespace

ProblemSpec example_9_1(double nu, double nu1, double mu1) {
    if (!(nu > 0.0 && nu < 1.0 && nu1 > 0.0 && nu1 < nu && mu1 > 0.0 && mu1 < nu))
        throw DomainError("example_9_1: requires 0 < nu1, mu1 < nu < 1");

    ProblemSpec p = example_base();
    p.name = "example_9_1";
    p.orders = FractionalOrders{nu, {nu1}, {mu1}};
    p.rho0 = Expr::parse("1 + t");
    p.rho = {Expr::parse("1/2")};
    p.gamma = {Expr::parse("(1 + t^2)/2")};
    p.nonlinearity = Expr::parse("x*t*sin(u^2)");
    p.source = Expr::parse(bind(kExample91Source, {{"nu", nu}, {"nu1", nu1}, {"mu1", mu1}}));
    p.exact = Expr::parse(bind("cos(pi*x) + t^{nu}/gamma(1+{nu})", {{"nu", nu}}));
    return p;
}

ProblemSpec example_9_2(Example92Variant variant, double nu) {
    if (!(nu > 0.0 && nu < 1.0)) throw DomainError("example_9_2: requires 0 < nu < 1");

    ProblemSpec p = example_base();
    p.name = variant == Example92Variant::Linear ? "example_9_2_linear" : "example_9_2_nonlinear";
    p.orders = FractionalOrders{nu, {nu / 3.0}, {nu / 2.0}};
    p.rho0 = Expr::constant(1.0);
    p.rho = {Expr::parse("1/2")};
    p.gamma = {Expr::parse("1/2")};
    p.nonlinearity = variant == Example92Variant::Linear ? Expr::constant(0.0) : Expr::parse("x*t*cos(u^2)");
    p.source = Expr::constant(0.0);
    return p;
}

const std::vector<std::string>& library_problem_names() {
    static const std::vector<std::string> names = {"example_9_1", "example_9_2_linear", "example_9_2_nonlinear"};
    return names;
}

ProblemSpec library_problem(std::string_view name, double nu, double nu1, double mu1) {
    if (name == "example_9_1") return example_9_1(nu, nu1, mu1);
    if (name == "example_9_2_linear") return example_9_2(Example92Variant::Linear, nu);
    if (name == "example_9_2_nonlinear") return example_9_2(Example92Variant::Nonlinear, nu);
    throw ConfigError("unknown problem '" + std::string(name) + "'", 0, "problem.name");
}

}  // namespace fracsolve
