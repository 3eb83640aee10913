#include "netid/identities.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "netid/errors.hpp"

namespace netid {

namespace {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void json_escape_into(std::string& out, const std::string& s) {
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
}

}  // namespace

std::string to_string(CheckName name) {
    switch (name) {
        case CheckName::theorem_main: return "theorem_main";
        case CheckName::corollary_main: return "corollary_main";
        case CheckName::recurrence: return "recurrence";
        case CheckName::trans2: return "trans2";
        case CheckName::low_order_1: return "low_order_1";
        case CheckName::low_order_2: return "low_order_2";
        case CheckName::low_order_3: return "low_order_3";
        case CheckName::low_order_4: return "low_order_4";
    }
    throw DomainError("unknown check name");
}

CheckName check_name_from_string(const std::string& s) {
    if (s == "theorem_main") return CheckName::theorem_main;
    if (s == "corollary_main") return CheckName::corollary_main;
    if (s == "recurrence") return CheckName::recurrence;
    if (s == "trans2") return CheckName::trans2;
    if (s == "low_order_1") return CheckName::low_order_1;
    if (s == "low_order_2") return CheckName::low_order_2;
    if (s == "low_order_3") return CheckName::low_order_3;
    if (s == "low_order_4") return CheckName::low_order_4;
    throw ValueError("unknown check name '" + s + "'");
}

std::string report_to_json(const IdentityReport& report) {
    std::string out = "{\"graph\":{\"n\":" + std::to_string(report.n) +
                      ",\"e\":" + std::to_string(report.e) +
                      "},\"tolerance\":" + format_double(report.tolerance) + ",\"checks\":[";
    bool first = true;
    for (const IdentityCheck& c : report.checks) {
        if (!first)
            out += ',';
        first = false;
        out += "{\"name\":\"" + to_string(c.name) + "\",\"k\":" + std::to_string(c.k) + ",\"s\":";
        if (c.source) {
            out += '"';
            json_escape_into(out, *c.source);
            out += '"';
        } else {
            out += "null";
        }
        out += ",\"lhs\":" + format_double(c.lhs) + ",\"rhs\":" + format_double(c.rhs) +
               ",\"residual\":" + format_double(c.residual) +
               ",\"pass\":" + (c.pass ? "true" : "false") + "}";
    }
    out += "],\"pass\":";
    out += report.pass ? "true" : "false";
    out += "}";
    return out;
}

IdentityReport report_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    IdentityReport report;
    report.n = j.at("graph").at("n").get<int>();
    report.e = j.at("graph").at("e").get<int>();
    report.tolerance = j.at("tolerance").get<double>();
    report.pass = j.at("pass").get<bool>();
    for (const auto& jc : j.at("checks")) {
        IdentityCheck c;
        c.name = check_name_from_string(jc.at("name").get<std::string>());
        c.k = jc.at("k").get<int>();
        if (!jc.at("s").is_null())
            c.source = jc.at("s").get<std::string>();
        c.lhs = jc.at("lhs").get<double>();
        c.rhs = jc.at("rhs").get<double>();
        c.residual = jc.at("residual").get<double>();
        c.pass = jc.at("pass").get<bool>();
        report.checks.push_back(std::move(c));
    }
    return report;
}

IdentitySuite::IdentitySuite(const MetrizedGraph& g, double tolerance)
    : IdentitySuite(g, g, tolerance) {}

IdentitySuite::IdentitySuite(const MetrizedGraph& g, const MetrizedGraph& lhs_graph,
                             double tolerance)
    : graph_(g),
      tolerance_(tolerance),
      profile_(conductance_profile(g)),
      lap_(laplacian(g)),
      pinv_(pseudo_inverse(laplacian(lhs_graph))),
      resist_(resistance_matrix(pinv_)),
      kernel_(profile_) {
    if (lhs_graph.vertex_count() != g.vertex_count())
        throw PreconditionError("voltage-side graph must share the vertex set");
    neighbors_.resize(g.vertex_count());
    for (const Edge& e : g.edges()) {
        neighbors_[e.a].push_back(e.b);
        neighbors_[e.b].push_back(e.a);
    }
}

double IdentitySuite::volt(int base, int y, int z) const {
    const Eigen::MatrixXd& m = pinv_.matrix();
    return m(base, base) - (m(base, y) + m(base, z)) + m(y, z);
}

IdentityCheck IdentitySuite::make_check(CheckName name, int k, std::optional<int> s, double lhs,
                                        double rhs) const {
    IdentityCheck c;
    c.name = name;
    c.k = k;
    if (s)
        c.source = graph_.vertex_name(*s);
    c.lhs = lhs;
    c.rhs = rhs;
    c.residual = std::abs(lhs - rhs);
    c.pass = c.residual <= tolerance_ * std::max(1.0, std::abs(rhs));
    return c;
}

double IdentitySuite::rhs_main(int k) {
    double rhs = graph_.vertex_count() - k;
    std::vector<double> traces = kernel_.trace_sequence(std::max(1, k - 1));
    for (int i = 1; i <= k - 1; ++i)
        rhs += traces[i - 1];
    return rhs;
}

IdentityCheck IdentitySuite::theorem_main(int s, int k) {
    if (k < 1)
        throw DomainError("k must be >= 1");
    const int n = graph_.vertex_count();
    const Eigen::MatrixXd& pk = kernel_.kstep(k);
    const Eigen::VectorXd& c = kernel_.vertex_conductance();
    double lhs = 0.0;
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < n; ++t)
            lhs += c(i) * volt(i, s, t) * pk(i, t);
    return make_check(CheckName::theorem_main, k, s, lhs, rhs_main(k));
}

IdentityCheck IdentitySuite::extended_foster(int k) {
    if (k < 1)
        throw DomainError("k must be >= 1");
    const int n = graph_.vertex_count();
    const Eigen::MatrixXd& pk = kernel_.kstep(k);
    const Eigen::VectorXd& c = kernel_.vertex_conductance();
    const Eigen::MatrixXd& r = resist_.matrix();
    double lhs = 0.0;
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < n; ++t)
            lhs += c(i) * r(i, t) * pk(i, t);
    return make_check(CheckName::corollary_main, k, std::nullopt, lhs / 2.0, rhs_main(k));
}

std::array<IdentityCheck, 2> IdentitySuite::recurrence(int k) {
    if (k < 1)
        throw DomainError("k must be >= 1");
    const int n = graph_.vertex_count();
    const Eigen::VectorXd& c = kernel_.vertex_conductance();
    const Eigen::MatrixXd& lp = pinv_.matrix();
    auto weighted_sum = [&](const Eigen::MatrixXd& pk) {
        double sum = 0.0;
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < n; ++t)
                sum += c(i) * lp(i, t) * pk(i, t);
        return sum;
    };
    const double s_k = weighted_sum(kernel_.kstep(k));
    const double s_next = weighted_sum(kernel_.kstep(k + 1));
    const double tr_k = kernel_.kstep(k).trace();

    double diag = 0.0;
    for (int i = 0; i < n; ++i)
        diag += c(i) * lp(i, i);
    double closed = k - n + diag;
    std::vector<double> traces = kernel_.trace_sequence(std::max(1, k - 1));
    for (int i = 1; i <= k - 1; ++i)
        closed -= traces[i - 1];

    return {make_check(CheckName::recurrence, k, std::nullopt, s_next, 1.0 - tr_k + s_k),
            make_check(CheckName::trans2, k, std::nullopt, s_k, closed)};
}

double IdentitySuite::adjacent_pair_conductance_sum() const {
    const Eigen::MatrixXd& cpq = profile_.pair;
    const Eigen::VectorXd& cv = profile_.vertex;
    double sum = 0.0;
    for (const Edge& e : graph_.edges())
        sum += 2.0 * cpq(e.a, e.b) * cpq(e.a, e.b) / (cv(e.a) * cv(e.b));
    return sum;
}

double IdentitySuite::triangle_conductance_sum() const {
    const Eigen::MatrixXd& cpq = profile_.pair;
    const Eigen::VectorXd& cv = profile_.vertex;
    const int n = graph_.vertex_count();
    double sum = 0.0;
    // each unordered triangle contributes six equal ordered terms
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            if (cpq(p, q) == 0.0)
                continue;
            for (int w = q + 1; w < n; ++w) {
                if (cpq(p, w) == 0.0 || cpq(q, w) == 0.0)
                    continue;
                sum += 6.0 * cpq(p, q) * cpq(q, w) * cpq(w, p) / (cv(p) * cv(q) * cv(w));
            }
        }
    return sum;
}

IdentityCheck IdentitySuite::low_order(int s, int order) {
    if (order < 1 || order > 4)
        throw DomainError("low-order identities cover orders 1..4");
    const int n = graph_.vertex_count();
    const Eigen::MatrixXd& pk = kernel_.kstep(order);
    const Eigen::VectorXd& c = kernel_.vertex_conductance();
    double lhs = 0.0;
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < n; ++t)
            lhs += c(i) * volt(i, s, t) * pk(i, t);
    lhs /= 2.0;

    double rhs = (n - order) / 2.0;
    if (order >= 3)
        rhs += adjacent_pair_conductance_sum() / 2.0;
    if (order == 4)
        rhs += triangle_conductance_sum() / 2.0;

    static constexpr CheckName kNames[4] = {CheckName::low_order_1, CheckName::low_order_2,
                                            CheckName::low_order_3, CheckName::low_order_4};
    return make_check(kNames[order - 1], order, s, lhs, rhs);
}

double IdentitySuite::low_order_literal(int s, int order) {
    if (order < 1 || order > 4)
        throw DomainError("low-order identities cover orders 1..4");
    const Eigen::MatrixXd& cpq = profile_.pair;
    const Eigen::VectorXd& cv = profile_.vertex;
    // sum over walks (v0,...,v_order) with v0 < v_order of
    // j_{v0}(v_order, s) * prod(edge conductances) / prod(inner vertex conductances)
    double sum = 0.0;
    std::vector<int> walk(order + 1);
    auto extend = [&](auto&& self, int depth) -> void {
        if (depth == order) {
            int w = walk[0], t = walk[order];
            if (w >= t)
                return;
            double term = volt(w, t, s);
            for (int d = 0; d < order; ++d)
                term *= cpq(walk[d], walk[d + 1]);
            for (int d = 1; d < order; ++d)
                term /= cv(walk[d]);
            sum += term;
            return;
        }
        for (int next : neighbors_[walk[depth]]) {
            walk[depth + 1] = next;
            self(self, depth + 1);
        }
    };
    for (int v = 0; v < graph_.vertex_count(); ++v) {
        walk[0] = v;
        extend(extend, 0);
    }
    return sum;
}

IdentityReport IdentitySuite::full_report(std::optional<int> source, int kmax) {
    if (kmax < 1)
        throw DomainError("kmax must be >= 1");
    std::vector<int> sources;
    if (source) {
        if (*source < 0 || *source >= graph_.vertex_count())
            throw PreconditionError("source vertex out of range");
        sources.push_back(*source);
    } else {
        for (int s = 0; s < graph_.vertex_count(); ++s)
            sources.push_back(s);
    }

    IdentityReport report;
    report.n = graph_.vertex_count();
    report.e = graph_.edge_count();
    report.tolerance = tolerance_;
    for (int s : sources)
        for (int k = 1; k <= kmax; ++k)
            report.checks.push_back(theorem_main(s, k));
    for (int k = 1; k <= kmax; ++k)
        report.checks.push_back(extended_foster(k));
    std::vector<std::array<IdentityCheck, 2>> pairs;
    for (int k = 1; k <= kmax; ++k)
        pairs.push_back(recurrence(k));
    for (const auto& pair : pairs)
        report.checks.push_back(pair[0]);
    for (const auto& pair : pairs)
        report.checks.push_back(pair[1]);
    for (int s : sources)
        for (int order = 1; order <= 4; ++order)
            report.checks.push_back(low_order(s, order));

    report.pass = true;
    for (const IdentityCheck& c : report.checks)
        report.pass = report.pass && c.pass;
    return report;
}

IdentityCheck theorem_main_check(const MetrizedGraph& g, int s, int k, double tolerance) {
    return IdentitySuite(g, tolerance).theorem_main(s, k);
}

IdentityCheck extended_foster_check(const MetrizedGraph& g, int k, double tolerance) {
    return IdentitySuite(g, tolerance).extended_foster(k);
}

std::array<IdentityCheck, 2> recurrence_check(const MetrizedGraph& g, int k, double tolerance) {
    return IdentitySuite(g, tolerance).recurrence(k);
}

IdentityCheck low_order_identity(const MetrizedGraph& g, int s, int order, double tolerance) {
    return IdentitySuite(g, tolerance).low_order(s, order);
}

double low_order_literal(const MetrizedGraph& g, int s, int order) {
    return IdentitySuite(g).low_order_literal(s, order);
}

IdentityReport full_report(const MetrizedGraph& g, std::optional<int> source, int kmax,
                           double tolerance) {
    return IdentitySuite(g, tolerance).full_report(source, kmax);
}

}  // namespace netid
