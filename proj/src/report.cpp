#include "mahler/report.hpp"

#include "mahler/corpus.hpp"
#include "mahler/parse.hpp"

#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mahler {

namespace {

nlohmann::json matq_json(const MatQ& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

MahlerSystem system_from(const InputDoc& doc, std::string& matrix_echo) {
    if (doc.example) {
        for (auto& named : all_named())
            if (named.name == *doc.example) {
                matrix_echo = serialize_matrix(named.sys.A());
                return named.sys;
            }
        throw std::invalid_argument("unknown example '" + *doc.example + "'");
    }
    RatFunMat a = parse_matrix(doc.matrix_text);
    matrix_echo = serialize_matrix(a);
    return MahlerSystem(doc.p, std::move(a));
}

}  // namespace

Report run(const InputDoc& doc) {
    if (doc.order < 0) throw std::invalid_argument("order must be >= 0");
    Report report;
    report.input = doc;

    const auto t0 = std::chrono::steady_clock::now();
    MahlerSystem sys = system_from(doc, report.matrix_echo);
    report.input.p = sys.p();

    if (doc.d_override) {
        const long d = *doc.d_override;
        if (d < 1 || std::gcd(d, sys.p()) != 1)
            throw std::invalid_argument("-d must be positive and coprime to p");
        FixedDResult res = decide_fixed_d(sys, d);
        if (res.verdict.regular_singular) {
            const long t = std::max(res.verdict.bounds.mu + 1, d * doc.order);
            PuiseuxMatrix gauge = extend_gauge(sys, *res.series, t);
            res.verdict.residual = verify_gauge(sys, gauge, *res.verdict.Lambda, t);
            res.verdict.gauge = std::move(gauge);
        }
        report.verdict = std::move(res.verdict);
    } else {
        report.verdict = decide(sys, doc.order, doc.scan_all_d);
    }

    const auto t1 = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return report;
}

nlohmann::json to_json(const Report& report) {
    const Verdict& v = report.verdict;
    nlohmann::json j;
    j["input"] = {
        {"p", report.input.p},
        {"matrix", report.matrix_echo},
        {"order", report.input.order},
        {"scan_all_d", report.input.scan_all_d},
    };
    if (report.input.example) j["input"]["example"] = *report.input.example;
    if (report.input.d_override) j["input"]["d_override"] = *report.input.d_override;

    j["regular_singular"] = v.regular_singular;
    j["d"] = v.d;
    j["nu"] = v.bounds.nu;
    j["mu"] = v.bounds.mu;
    j["dimX"] = v.dimX;
    j["Lambda"] = v.Lambda ? matq_json(*v.Lambda) : nlohmann::json(nullptr);
    j["R"] = v.R ? matq_json(*v.R) : nlohmann::json(nullptr);
    if (v.gauge) {
        nlohmann::json coeffs = nlohmann::json::object();
        for (const auto& [n, c] : v.gauge->coeffs()) coeffs[std::to_string(n)] = matq_json(c);
        j["gauge"] = {{"d", v.gauge->d()},
                      {"known_up_to", v.gauge->known_up_to()},
                      {"coeffs", std::move(coeffs)}};
    } else {
        j["gauge"] = nullptr;
    }
    if (v.residual) {
        if (v.residual->is_infinite()) j["residual_valuation"] = "inf";
        else j["residual_valuation"] = v.residual->value();
    } else {
        j["residual_valuation"] = nullptr;
    }
    j["elapsed_ms"] = report.elapsed_ms;
    return j;
}

std::string to_text(const Report& report) {
    const Verdict& v = report.verdict;
    std::ostringstream os;
    os << "p = " << report.input.p << ", matrix " << report.matrix_echo << "\n";
    os << "d = " << v.d << " (nu = " << v.bounds.nu << ", mu = " << v.bounds.mu
       << "), dim X = " << v.dimX << "\n";
    if (!v.regular_singular) {
        os << "verdict: NOT regular singular at 0\n";
        return os.str();
    }
    os << "verdict: regular singular at 0\n";
    os << "Lambda =\n";
    for (size_t i = 0; i < v.Lambda->rows(); ++i) {
        os << "  [";
        for (size_t j = 0; j < v.Lambda->cols(); ++j) {
            if (j) os << ", ";
            os << v.Lambda->at(i, j);
        }
        os << "]\n";
    }
    if (v.gauge) {
        os << "gauge Gamma = sum of C_n z^(n/" << v.gauge->d() << "), computed through n = "
           << v.gauge->known_up_to() << ":\n";
        for (const auto& [n, c] : v.gauge->coeffs()) {
            os << "  n = " << n << " (z^" << n << "/" << v.gauge->d() << "):";
            for (size_t i = 0; i < c.rows(); ++i) {
                os << (i ? "; " : " ");
                os << "[";
                for (size_t j = 0; j < c.cols(); ++j) {
                    if (j) os << ", ";
                    os << c.at(i, j);
                }
                os << "]";
            }
            os << "\n";
        }
    }
    if (v.residual) {
        os << "residual valuation: ";
        if (v.residual->is_infinite()) os << "+inf (all computable coefficients vanish)";
        else os << v.residual->value();
        os << "\n";
    }
    return os.str();
}

}  // namespace mahler
