#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace sflow {

/// A parsed arithmetic expression over variables x1..xd and named parameters.
///
/// Grammar: + - * / ^ (right assoc), unary minus, parentheses, numeric
/// literals, and the functions sin cos tan exp log sqrt abs tanh sinh cosh.
/// Parameters are substituted at parse time; variables are bound at eval time.
class Expr {
public:
    static Expr parse(const std::string& text, int dim,
                      const std::map<std::string, double>& params);

    double eval(const double* x) const;

    Expr(Expr&&) noexcept;
    Expr& operator=(Expr&&) noexcept;
    ~Expr();

    struct Node;

private:
    Expr();
    std::unique_ptr<Node> root_;
};

} // namespace sflow
