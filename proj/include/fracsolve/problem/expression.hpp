#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>

namespace fracsolve {

/// Scalar closed-form expression in the variables x, t and u.
///
/// Grammar (whitespace-insensitive):
///
///     expr    := term  (('+' | '-') term)*
///     term    := unary (('*' | '/') unary)*
///     unary   := ('+' | '-') unary | power
///     power   := primary ('^' unary)?          right-associative
///     primary := number | 'x' | 't' | 'u' | 'pi'
///              | func '(' expr (',' expr)* ')' | '(' expr ')'
///     func    := sin | cos | exp | pow | gamma
///
/// Parsed text is compiled to a postfix program; evaluation is allocation-free.
/// Expressions can also wrap a native callable, which evaluates the same way
/// but cannot be written back to a config file.
class Expr {
public:
    using Native = std::function<double(double x, double t, double u)>;

    /// The constant 0.
    Expr();

    /// Throws ConfigError with the column of the offending token.
    static Expr parse(std::string_view text);
    static Expr constant(double value);
    static Expr native(Native fn, std::string label = "native");

    double operator()(double x, double t, double u = 0.0) const;

    /// Source text; for native expressions a "<label>" placeholder.
    const std::string& text() const noexcept;
    bool is_native() const noexcept;
    bool depends_on_u() const noexcept;

    /// Structural equality by source text (native expressions compare by identity).
    friend bool operator==(const Expr& a, const Expr& b);

private:
    struct Program;
    explicit Expr(std::shared_ptr<const Program> program);
    std::shared_ptr<const Program> program_;
};

/// Formats a double with 17 significant digits, the exact form used when
/// numbers are spliced into expression text or written to CSV.
std::string format_number(double value);

}  // namespace fracsolve
