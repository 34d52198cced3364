#include "fracsolve/cli/run_spec.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "fracsolve/cli/toml_subset.hpp"
#include "fracsolve/error.hpp"
#include "fracsolve/problem/library.hpp"

namespace fracsolve {

namespace {

const std::set<std::string> kSections = {"run", "problem", "orders", "grid", "kernel", "bc", "output", "nu_star"};

// Typed access to a TomlDocument that remembers which keys were consumed, so
// leftovers can be reported as unknown.
class Reader {
public:
    explicit Reader(const TomlDocument& doc) : doc_(doc) {}

    const TomlEntry* take(const std::string& key) {
        const TomlEntry* e = doc_.find(key);
        if (e) used_.insert(key);
        return e;
    }

    bool has(const std::string& key) const { return doc_.find(key) != nullptr; }
    int line(const std::string& key) const {
        const TomlEntry* e = doc_.find(key);
        return e ? e->line : 0;
    }

    [[noreturn]] void fail(const std::string& key, const std::string& msg) const {
        throw ConfigError(msg, line(key), key);
    }

    std::optional<std::string> string(const std::string& key) {
        const TomlEntry* e = take(key);
        if (!e) return std::nullopt;
        if (!e->value.is_string()) fail(key, "expected a string");
        return std::get<std::string>(e->value.data);
    }

    std::optional<double> number(const std::string& key) {
        const TomlEntry* e = take(key);
        if (!e) return std::nullopt;
        return as_number(e->value, key);
    }

    std::optional<int> integer(const std::string& key) {
        const TomlEntry* e = take(key);
        if (!e) return std::nullopt;
        return as_integer(e->value, key);
    }

    std::optional<bool> boolean(const std::string& key) {
        const TomlEntry* e = take(key);
        if (!e) return std::nullopt;
        if (!e->value.is_bool()) fail(key, "expected true or false");
        return std::get<bool>(e->value.data);
    }

    /// Scalar or array of numbers.
    std::optional<std::vector<double>> numbers(const std::string& key) {
        const TomlEntry* e = take(key);
        if (!e) return std::nullopt;
        if (!e->value.is_array()) return std::vector<double>{as_number(e->value, key)};
        std::vector<double> out;
        for (const auto& v : std::get<TomlValue::Array>(e->value.data)) out.push_back(as_number(v, key));
        return out;
    }

    std::optional<std::vector<int>> integers(const std::string& key) {
        const TomlEntry* e = take(key);
        if (!e) return std::nullopt;
        if (!e->value.is_array()) return std::vector<int>{as_integer(e->value, key)};
        std::vector<int> out;
        for (const auto& v : std::get<TomlValue::Array>(e->value.data)) out.push_back(as_integer(v, key));
        return out;
    }

    std::optional<std::vector<std::string>> strings(const std::string& key) {
        const TomlEntry* e = take(key);
        if (!e) return std::nullopt;
        if (!e->value.is_array()) fail(key, "expected an array of strings");
        std::vector<std::string> out;
        for (const auto& v : std::get<TomlValue::Array>(e->value.data)) {
            if (!v.is_string()) fail(key, "expected an array of strings");
            out.push_back(std::get<std::string>(v.data));
        }
        return out;
    }

    Expr expression(const std::string& key, const std::string& fallback) {
        const auto text = string(key);
        try {
            return Expr::parse(text.value_or(fallback));
        } catch (const ConfigError& e) {
            fail(key, e.what());
        }
    }

    void reject_leftovers() const {
        for (const auto& [key, entry] : doc_.entries())
            if (!used_.count(key)) throw ConfigError("unknown key", entry.line, key);
    }

private:
    double as_number(const TomlValue& v, const std::string& key) const {
        if (!v.is_number()) fail(key, "expected a number");
        return std::get<double>(v.data);
    }

    int as_integer(const TomlValue& v, const std::string& key) const {
        if (!v.is_number() || !v.integer) fail(key, "expected an integer");
        const double d = std::get<double>(v.data);
        if (std::abs(d) > 1e9) fail(key, "integer out of range");
        return static_cast<int>(d);
    }

    const TomlDocument& doc_;
    std::set<std::string> used_;
};

ProblemSpec read_custom_problem(Reader& r, double nu) {
    ProblemSpec p;
    p.name = "custom";
    if (!r.has("problem.diffusion")) throw ConfigError("missing required key", 0, "problem.diffusion");
    if (!r.has("problem.initial")) throw ConfigError("missing required key", 0, "problem.initial");
    p.diffusion = r.expression("problem.diffusion", "0");
    p.advection = r.expression("problem.advection", "0");
    p.memory_coeff = r.expression("problem.memory_coeff", "0");
    p.rho0 = r.expression("problem.rho0", "1");
    p.nonlinearity = r.expression("problem.nonlinearity", "0");
    p.source = r.expression("problem.source", "0");
    p.initial = r.expression("problem.initial", "0");
    if (r.has("problem.exact")) p.exact = r.expression("problem.exact", "0");
    auto expr_list = [&](const std::string& key) {
        std::vector<Expr> out;
        for (const auto& s : r.strings(key).value_or(std::vector<std::string>{})) {
            try {
                out.push_back(Expr::parse(s));
            } catch (const ConfigError& e) {
                r.fail(key, e.what());
            }
        }
        return out;
    };
    p.rho = expr_list("problem.rho");
    p.gamma = expr_list("problem.gamma");
    p.length = r.number("problem.length").value_or(1.0);
    p.horizon = r.number("problem.horizon").value_or(1.0);

    p.orders.nu = nu;
    p.orders.nu_list = r.numbers("orders.nu_list").value_or(std::vector<double>{});
    p.orders.mu_list = r.numbers("orders.mu_list").value_or(std::vector<double>{});

    p.kernel.enabled = r.boolean("kernel.enabled").value_or(false);
    p.kernel.beta = r.number("kernel.beta").value_or(0.0);
    p.kernel.scale = r.number("kernel.scale").value_or(1.0);

    auto read_bc = [&](const std::string& side, BoundaryCondition& bc) {
        const std::string key = "bc." + side;
        if (const auto c = r.numbers(key)) {
            if (c->size() != 2) r.fail(key, "expected [derivative coefficient, value coefficient]");
            bc.c_deriv = (*c)[0];
            bc.c_value = (*c)[1];
        }
        bc.data = r.expression(key + "_data", "0");
    };
    read_bc("left", p.left);
    read_bc("right", p.right);
    return p;
}

void check_positive(Reader& r, const std::string& key, double v) {
    if (!(v > 0.0)) r.fail(key, "must be positive");
}

std::string number_list(const std::vector<double>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + format_number(v[i]);
    return out + "]";
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_string(Command command) {
    switch (command) {
        case Command::Solve: return "solve";
        case Command::Converge: return "converge";
        case Command::NuStar: return "nu-star";
        case Command::ResidualCheck: return "residual-check";
    }
    return "?";
}

std::optional<Command> parse_command(std::string_view name) {
    for (Command c : {Command::Solve, Command::Converge, Command::NuStar, Command::ResidualCheck})
        if (to_string(c) == name) return c;
    return std::nullopt;
}

std::vector<double> default_nu_sweep() {
    std::vector<double> v;
    for (int i = 1; i <= 9; ++i) v.push_back(i / 10.0);
    return v;
}

std::vector<GridSize> default_grids() { return {{10, 10}, {20, 20}, {30, 30}}; }

std::vector<double> default_t_star() {
    std::vector<double> v;
    for (int i = 1; i <= 11; ++i) v.push_back(i / 100.0);
    return v;
}

RunSpec parse_config(std::string_view text, std::optional<Command> command) {
    const TomlDocument doc = TomlDocument::parse(text);
    for (const auto& [key, entry] : doc.entries()) {
        const auto dot = key.find('.');
        if (dot == std::string::npos) throw ConfigError("key outside any section", entry.line, key);
        if (!kSections.count(key.substr(0, dot)))
            throw ConfigError("unknown section", doc.section_line(key.substr(0, dot)), key.substr(0, dot));
    }
    Reader r(doc);
    RunSpec spec;

    if (const auto name = r.string("run.command")) {
        const auto c = parse_command(*name);
        if (!c) r.fail("run.command", "unknown command '" + *name + "'");
        spec.command = *c;
    }
    if (command) spec.command = *command;
    const Command cmd = spec.command;

    spec.richardson = r.boolean("run.richardson").value_or(cmd != Command::Solve);
    spec.richardson_order = r.integer("run.richardson_order").value_or(1);
    if (spec.richardson_order < 1) r.fail("run.richardson_order", "must be at least 1");
    spec.residual_samples = r.integer("run.residual_samples").value_or(5);
    if (spec.residual_samples < 1) r.fail("run.residual_samples", "must be at least 1");
    spec.residual_tolerance = r.number("run.residual_tolerance").value_or(1e-8);
    check_positive(r, "run.residual_tolerance", spec.residual_tolerance);

    spec.problem = r.string("problem.name").value_or("example_9_1");
    const bool custom = spec.problem == "custom";
    if (!custom) {
        const auto& names = library_problem_names();
        if (std::find(names.begin(), names.end(), spec.problem) == names.end())
            r.fail("problem.name", "unknown problem '" + spec.problem + "'");
    }

    if (auto nu = r.numbers("orders.nu")) {
        spec.nu = std::move(*nu);
    } else if (cmd == Command::Converge && !custom) {
        spec.nu = default_nu_sweep();
    } else if (cmd != Command::NuStar) {
        throw ConfigError("missing required key", doc.section_line("orders"), "orders.nu");
    }
    if (cmd != Command::NuStar && spec.nu.empty()) r.fail("orders.nu", "needs at least one value");
    if (!custom) {
        spec.nu1 = r.number("orders.nu1");
        spec.mu1 = r.number("orders.mu1");
    } else {
        if (spec.nu.size() > 1) r.fail("orders.nu", "custom problems take a single order");
        spec.custom = read_custom_problem(r, spec.nu.empty() ? 1.0 : spec.nu.front());
    }

    const bool has_grid = r.has("grid.K") || r.has("grid.J") || doc.has_section("grid");
    if (has_grid) {
        const auto K = r.integers("grid.K");
        const auto J = r.integers("grid.J");
        if (!K) throw ConfigError("missing required key", doc.section_line("grid"), "grid.K");
        if (!J) throw ConfigError("missing required key", doc.section_line("grid"), "grid.J");
        if (K->size() != J->size()) r.fail("grid.J", "grid.K and grid.J must have the same length");
        for (std::size_t i = 0; i < K->size(); ++i) {
            if ((*K)[i] < 2) r.fail("grid.K", "needs at least 2 intervals");
            if ((*J)[i] < 1) r.fail("grid.J", "needs at least 1 time step");
            spec.grids.push_back({(*K)[i], (*J)[i]});
        }
    } else if (cmd == Command::Converge) {
        spec.grids = default_grids();
    } else if (cmd == Command::Solve) {
        throw ConfigError("missing required section [grid]", 0, "grid");
    }
    if ((cmd == Command::Solve || cmd == Command::Converge) && spec.grids.empty())
        r.fail("grid.K", "needs at least one grid");
    if (cmd == Command::Solve) {
        if (spec.grids.size() != 1) r.fail("grid.K", "solve takes a single grid");
        if (spec.nu.size() != 1) r.fail("orders.nu", "solve takes a single order");
    }

    spec.output = r.string("output.path").value_or("");
    spec.snapshots = r.integer("output.snapshots").value_or(8);
    if (spec.snapshots < 1) r.fail("output.snapshots", "must be at least 1");
    spec.snapshot_times = r.numbers("output.times").value_or(std::vector<double>{});
    spec.emit_samples = r.boolean("output.emit_samples").value_or(false);

    spec.t_star = r.numbers("nu_star.t_star").value_or(default_t_star());
    if (cmd == Command::NuStar && spec.t_star.empty()) r.fail("nu_star.t_star", "needs at least one value");
    spec.sample_nu = r.number("nu_star.sample_nu").value_or(0.5);
    spec.sample_count = r.integer("nu_star.sample_count").value_or(200);
    if (spec.sample_count < 1) r.fail("nu_star.sample_count", "must be at least 1");

    r.reject_leftovers();

    // Instantiate once per order so bad order combinations surface as config errors.
    if (cmd != Command::NuStar) {
        for (double nu : spec.nu) {
            try {
                check_structure(resolve_problem(spec, nu));
            } catch (const DomainError& e) {
                throw ConfigError(e.what(), r.line("orders.nu"), "orders.nu");
            }
        }
    }
    return spec;
}

ProblemSpec resolve_problem(const RunSpec& spec, double nu) {
    if (spec.custom) {
        ProblemSpec p = *spec.custom;
        p.orders.nu = nu;
        return p;
    }
    return library_problem(spec.problem, nu, spec.nu1.value_or(nu / 3.0), spec.mu1.value_or(nu / 2.0));
}

std::string serialize(const RunSpec& spec) {
    std::ostringstream out;
    const auto b = [](bool v) { return v ? "true" : "false"; };

    out << "[run]\n";
    out << "command = " << quoted(to_string(spec.command)) << "\n";
    out << "richardson = " << b(spec.richardson) << "\n";
    out << "richardson_order = " << spec.richardson_order << "\n";
    out << "residual_samples = " << spec.residual_samples << "\n";
    out << "residual_tolerance = " << format_number(spec.residual_tolerance) << "\n";

    out << "\n[problem]\n";
    out << "name = " << quoted(spec.problem) << "\n";
    if (spec.custom) {
        const ProblemSpec& p = *spec.custom;
        out << "diffusion = " << quoted(p.diffusion.text()) << "\n";
        out << "advection = " << quoted(p.advection.text()) << "\n";
        out << "memory_coeff = " << quoted(p.memory_coeff.text()) << "\n";
        out << "rho0 = " << quoted(p.rho0.text()) << "\n";
        auto list = [&](const std::vector<Expr>& v) {
            std::string s = "[";
            for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + quoted(v[i].text());
            return s + "]";
        };
        out << "rho = " << list(p.rho) << "\n";
        out << "gamma = " << list(p.gamma) << "\n";
        out << "nonlinearity = " << quoted(p.nonlinearity.text()) << "\n";
        out << "source = " << quoted(p.source.text()) << "\n";
        out << "initial = " << quoted(p.initial.text()) << "\n";
        if (p.exact) out << "exact = " << quoted(p.exact->text()) << "\n";
        out << "length = " << format_number(p.length) << "\n";
        out << "horizon = " << format_number(p.horizon) << "\n";
    }

    if (!spec.nu.empty() || spec.custom) {
        out << "\n[orders]\n";
        if (!spec.nu.empty()) out << "nu = " << number_list(spec.nu) << "\n";
        if (spec.nu1) out << "nu1 = " << format_number(*spec.nu1) << "\n";
        if (spec.mu1) out << "mu1 = " << format_number(*spec.mu1) << "\n";
        if (spec.custom) {
            out << "nu_list = " << number_list(spec.custom->orders.nu_list) << "\n";
            out << "mu_list = " << number_list(spec.custom->orders.mu_list) << "\n";
        }
    }

    if (spec.custom) {
        const ProblemSpec& p = *spec.custom;
        out << "\n[kernel]\n";
        out << "enabled = " << b(p.kernel.enabled) << "\n";
        out << "beta = " << format_number(p.kernel.beta) << "\n";
        out << "scale = " << format_number(p.kernel.scale) << "\n";
        out << "\n[bc]\n";
        out << "left = " << number_list({p.left.c_deriv, p.left.c_value}) << "\n";
        out << "left_data = " << quoted(p.left.data.text()) << "\n";
        out << "right = " << number_list({p.right.c_deriv, p.right.c_value}) << "\n";
        out << "right_data = " << quoted(p.right.data.text()) << "\n";
    }

    if (!spec.grids.empty()) {
        out << "\n[grid]\n";
        std::string ks = "[", js = "[";
        for (std::size_t i = 0; i < spec.grids.size(); ++i) {
            ks += (i ? ", " : "") + std::to_string(spec.grids[i].K);
            js += (i ? ", " : "") + std::to_string(spec.grids[i].J);
        }
        out << "K = " << ks << "]\nJ = " << js << "]\n";
    }

    out << "\n[output]\n";
    if (!spec.output.empty()) out << "path = " << quoted(spec.output) << "\n";
    out << "snapshots = " << spec.snapshots << "\n";
    out << "times = " << number_list(spec.snapshot_times) << "\n";
    out << "emit_samples = " << b(spec.emit_samples) << "\n";

    out << "\n[nu_star]\n";
    out << "t_star = " << number_list(spec.t_star) << "\n";
    out << "sample_nu = " << format_number(spec.sample_nu) << "\n";
    out << "sample_count = " << spec.sample_count << "\n";
    return out.str();
}

}  // namespace fracsolve
