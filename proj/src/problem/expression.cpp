#include "fracsolve/problem/expression.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "fracsolve/error.hpp"
#include "fracsolve/kernels/special_functions.hpp"

namespace fracsolve {

namespace {

enum class Op : unsigned char { Const, X, T, U, Add, Sub, Mul, Div, Pow, Neg, Sin, Cos, Exp, Gamma };

struct Instr {
    Op op;
    double value = 0.0;
};

constexpr int kMaxStack = 64;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::vector<Instr> run() {
        parse_expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        if (code_.empty()) fail("empty expression");
        return std::move(code_);
    }

    bool uses_u() const { return uses_u_; }
    int max_depth() const { return max_depth_; }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ConfigError("expression error at column " + std::to_string(pos_ + 1) + ": " + msg + " in \"" +
                          std::string(text_) + "\"");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    void emit(Op op, double value = 0.0) {
        code_.push_back({op, value});
        switch (op) {
            case Op::Const:
            case Op::X:
            case Op::T:
            case Op::U:
                ++depth_;
                break;
            case Op::Add:
            case Op::Sub:
            case Op::Mul:
            case Op::Div:
            case Op::Pow:
                --depth_;
                break;
            default:
                break;
        }
        if (depth_ > max_depth_) max_depth_ = depth_;
        if (max_depth_ > kMaxStack) fail("expression nested too deeply");
    }

    void parse_expr() {
        parse_term();
        for (;;) {
            if (accept('+')) {
                parse_term();
                emit(Op::Add);
            } else if (accept('-')) {
                parse_term();
                emit(Op::Sub);
            } else {
                return;
            }
        }
    }

    void parse_term() {
        parse_unary();
        for (;;) {
            if (accept('*')) {
                parse_unary();
                emit(Op::Mul);
            } else if (accept('/')) {
                parse_unary();
                emit(Op::Div);
            } else {
                return;
            }
        }
    }

    void parse_unary() {
        if (accept('-')) {
            parse_unary();
            emit(Op::Neg);
        } else if (accept('+')) {
            parse_unary();
        } else {
            parse_power();
        }
    }

    void parse_power() {
        parse_primary();
        if (accept('^')) {
            parse_unary();
            emit(Op::Pow);
        }
    }

    void parse_primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            parse_number();
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            parse_identifier();
            return;
        }
        if (accept('(')) {
            parse_expr();
            expect(')');
            return;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    void parse_number() {
        const std::string rest(text_.substr(pos_));
        char* end = nullptr;
        const double value = std::strtod(rest.c_str(), &end);
        if (end == rest.c_str()) fail("malformed number");
        pos_ += static_cast<std::size_t>(end - rest.c_str());
        emit(Op::Const, value);
    }

    void parse_identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string_view name = text_.substr(start, pos_ - start);
        if (name == "x") return emit(Op::X);
        if (name == "t") return emit(Op::T);
        if (name == "u") {
            uses_u_ = true;
            return emit(Op::U);
        }
        if (name == "pi") return emit(Op::Const, kPi);

        Op op;
        int arity = 1;
        if (name == "sin") op = Op::Sin;
        else if (name == "cos") op = Op::Cos;
        else if (name == "exp") op = Op::Exp;
        else if (name == "gamma") op = Op::Gamma;
        else if (name == "pow") {
            op = Op::Pow;
            arity = 2;
        } else {
            pos_ = start;
            fail("unknown identifier '" + std::string(name) + "'");
        }
        expect('(');
        parse_expr();
        for (int i = 1; i < arity; ++i) {
            expect(',');
            parse_expr();
        }
        expect(')');
        emit(op);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::vector<Instr> code_;
    int depth_ = 0;
    int max_depth_ = 0;
    bool uses_u_ = false;
};

}  // namespace

struct Expr::Program {
    std::string text;
    std::vector<Instr> code;
    Native native;
    bool uses_u = false;
};

Expr::Expr() : Expr(constant(0.0)) {}

Expr::Expr(std::shared_ptr<const Program> program) : program_(std::move(program)) {}

Expr Expr::parse(std::string_view text) {
    Parser parser(text);
    auto program = std::make_shared<Program>();
    program->code = parser.run();
    program->uses_u = parser.uses_u();
    // Trim surrounding whitespace so equality ignores layout at the ends.
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    program->text = std::string(text.substr(b, e - b));
    return Expr(std::move(program));
}

Expr Expr::constant(double value) {
    auto program = std::make_shared<Program>();
    program->code = {{Op::Const, value}};
    program->text = format_number(value);
    return Expr(std::move(program));
}

Expr Expr::native(Native fn, std::string label) {
    auto program = std::make_shared<Program>();
    program->native = std::move(fn);
    program->text = "<" + label + ">";
    program->uses_u = true;
    return Expr(std::move(program));
}

double Expr::operator()(double x, double t, double u) const {
    const Program& p = *program_;
    if (p.native) return p.native(x, t, u);

    std::array<double, kMaxStack> stack;
    int top = -1;
    for (const Instr& in : p.code) {
        switch (in.op) {
            case Op::Const: stack[++top] = in.value; break;
            case Op::X: stack[++top] = x; break;
            case Op::T: stack[++top] = t; break;
            case Op::U: stack[++top] = u; break;
            case Op::Add: --top; stack[top] += stack[top + 1]; break;
            case Op::Sub: --top; stack[top] -= stack[top + 1]; break;
            case Op::Mul: --top; stack[top] *= stack[top + 1]; break;
            case Op::Div: --top; stack[top] /= stack[top + 1]; break;
            case Op::Pow: --top; stack[top] = std::pow(stack[top], stack[top + 1]); break;
            case Op::Neg: stack[top] = -stack[top]; break;
            case Op::Sin: stack[top] = std::sin(stack[top]); break;
            case Op::Cos: stack[top] = std::cos(stack[top]); break;
            case Op::Exp: stack[top] = std::exp(stack[top]); break;
            case Op::Gamma: stack[top] = gamma_fn(stack[top]); break;
        }
    }
    return stack[0];
}

const std::string& Expr::text() const noexcept { return program_->text; }

bool Expr::is_native() const noexcept { return static_cast<bool>(program_->native); }

bool Expr::depends_on_u() const noexcept { return program_->uses_u; }

bool operator==(const Expr& a, const Expr& b) {
    if (a.is_native() || b.is_native()) return a.program_ == b.program_;
    return a.text() == b.text();
}

std::string format_number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

}  // namespace fracsolve
