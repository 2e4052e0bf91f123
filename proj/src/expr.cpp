#include "phiheat/expr.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace phiheat {
namespace {

struct Num : Expr {
    double value;
    explicit Num(double v) : value(v) {}
    double eval(const ExprVars&) const override { return value; }
    bool uses_u() const override { return false; }
};

struct Var : Expr {
    char which;  // 'x','y','z','t','u','g' (g = gradsq(u))
    explicit Var(char w) : which(w) {}
    double eval(const ExprVars& v) const override {
        switch (which) {
            case 'x': return v.x;
            case 'y': return v.y;
            case 'z': return v.z;
            case 't': return v.t;
            case 'u': return v.u;
            case 'g': return v.gradsq_u;
        }
        return 0.0;
    }
    bool uses_u() const override { return which == 'u' || which == 'g'; }
};

struct Unary : Expr {
    std::function<double(double)> fn;
    bool is_gradsq = false;
    ExprPtr arg;
    double eval(const ExprVars& v) const override {
        if (is_gradsq) return v.gradsq_u;
        return fn(arg->eval(v));
    }
    bool uses_u() const override { return is_gradsq || arg->uses_u(); }
};

struct Binary : Expr {
    char op;
    ExprPtr a, b;
    double eval(const ExprVars& v) const override {
        double l = a->eval(v), r = b->eval(v);
        switch (op) {
            case '+': return l + r;
            case '-': return l - r;
            case '*': return l * r;
            case '/': return l / r;
            case '^': return std::pow(l, r);
        }
        return 0.0;
    }
    bool uses_u() const override { return a->uses_u() || b->uses_u(); }
};

class Parser {
public:
    Parser(const std::string& s, bool allow_u) : s_(s), allow_u_(allow_u) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return e;
    }

private:
    const std::string& s_;
    bool allow_u_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("expression error at position " + std::to_string(pos_) +
                                    ": " + why + " in '" + s_ + "'");
    }
    void skip_ws() { while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_; }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    ExprPtr expr() {
        ExprPtr e = term();
        while (true) {
            if (eat('+')) { auto b = std::make_shared<Binary>(); b->op='+'; b->a=e; b->b=term(); e=b; }
            else if (eat('-')) { auto b = std::make_shared<Binary>(); b->op='-'; b->a=e; b->b=term(); e=b; }
            else return e;
        }
    }
    ExprPtr term() {
        ExprPtr e = factor();
        while (true) {
            if (eat('*')) { auto b = std::make_shared<Binary>(); b->op='*'; b->a=e; b->b=factor(); e=b; }
            else if (eat('/')) { auto b = std::make_shared<Binary>(); b->op='/'; b->a=e; b->b=factor(); e=b; }
            else return e;
        }
    }
    ExprPtr factor() {
        ExprPtr base = unary();
        if (eat('^')) {
            auto b = std::make_shared<Binary>();
            b->op = '^'; b->a = base; b->b = factor();
            return b;
        }
        return base;
    }
    ExprPtr unary() {
        if (eat('-')) {
            auto u = std::make_shared<Unary>();
            u->fn = [](double a) { return -a; };
            u->arg = unary();
            return u;
        }
        return primary();
    }
    ExprPtr primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (std::isdigit((unsigned char)c) || c == '.') {
            size_t used = 0;
            double val;
            try { val = std::stod(s_.substr(pos_), &used); }
            catch (...) { fail("bad number"); }
            pos_ += used;
            return std::make_shared<Num>(val);
        }
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isalpha((unsigned char)c)) {
            size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_')) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (peek() == '(') {
                eat('(');
                auto u = std::make_shared<Unary>();
                if (name == "sin") u->fn = [](double a) { return std::sin(a); };
                else if (name == "cos") u->fn = [](double a) { return std::cos(a); };
                else if (name == "exp") u->fn = [](double a) { return std::exp(a); };
                else if (name == "sqrt") u->fn = [](double a) { return std::sqrt(a); };
                else if (name == "abs") u->fn = [](double a) { return std::abs(a); };
                else if (name == "log") u->fn = [](double a) { return std::log(a); };
                else if (name == "gradsq") {
                    if (!allow_u_) fail("gradsq(u) not allowed here");
                    u->is_gradsq = true;
                } else fail("unknown function '" + name + "'");
                ExprPtr arg = expr();
                if (u->is_gradsq) {
                    auto* v = dynamic_cast<const Var*>(arg.get());
                    if (v == nullptr || v->which != 'u') fail("gradsq takes the bare argument u");
                }
                if (!eat(')')) fail("expected ')'");
                u->arg = arg;
                return u;
            }
            if (name.size() == 1 && (name[0]=='x' || name[0]=='y' || name[0]=='z' || name[0]=='t'))
                return std::make_shared<Var>(name[0]);
            if (name == "u") {
                if (!allow_u_) fail("'u' not allowed in this expression");
                return std::make_shared<Var>('u');
            }
            if (name == "pi") return std::make_shared<Num>(M_PI);
            fail("unknown identifier '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

ExprPtr parse_expr(const std::string& text, bool allow_u) {
    return Parser(text, allow_u).parse();
}

}  // namespace phiheat
