#include "chronocalc/json_io.hpp"

namespace chronocalc {

Json matrix_to_json(const ComplexMatrix& m) {
    Json j;
    j["dim"] = m.dim();
    auto& re = j["re"] = Json::array();
    auto& im = j["im"] = Json::array();
    for (const auto& z : m.entries()) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    return j;
}

ComplexMatrix matrix_from_json(const Json& j) {
    const auto dim = j.at("dim").get<std::size_t>();
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (re.size() != dim * dim || im.size() != dim * dim)
        throw std::invalid_argument("matrix_from_json: re/im length must be dim*dim");
    std::vector<Complex> entries(dim * dim);
    for (std::size_t k = 0; k < entries.size(); ++k)
        entries[k] = Complex(re[k].get<double>(), im[k].get<double>());
    return ComplexMatrix(dim, std::move(entries));
}

Json vector_to_json(const Vector& v) {
    Json j;
    j["dim"] = v.dim();
    auto& re = j["re"] = Json::array();
    auto& im = j["im"] = Json::array();
    for (const auto& z : v.entries()) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    return j;
}

Vector vector_from_json(const Json& j) {
    const auto dim = j.at("dim").get<std::size_t>();
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (re.size() != dim || im.size() != dim)
        throw std::invalid_argument("vector_from_json: re/im length must be dim");
    std::vector<Complex> entries(dim);
    for (std::size_t k = 0; k < dim; ++k)
        entries[k] = Complex(re[k].get<double>(), im[k].get<double>());
    return Vector(std::move(entries));
}

Json expr_to_json(const TimeOrderedExpr& e) {
    Json j;
    j["dim"] = e.dim();
    j["a"] = e.interval_a();
    j["b"] = e.interval_b();
    auto& terms = j["terms"] = Json::array();
    for (const auto& t : e.terms()) {
        Json jt;
        jt["coeff"] = {t.coeff.real(), t.coeff.imag()};
        auto& factors = jt["factors"] = Json::array();
        for (const auto& f : t.factors)
            factors.push_back({{"t", f.time}, {"matrix", matrix_to_json(f.matrix)}});
        terms.push_back(std::move(jt));
    }
    return j;
}

TimeOrderedExpr expr_from_json(const Json& j) {
    const auto dim = j.at("dim").get<std::size_t>();
    const double a = j.value("a", 0.0);
    const double b = j.value("b", 1.0);
    TimeOrderedExpr e(dim, a, b);
    for (const auto& jt : j.at("terms")) {
        TimeOrderedTerm term;
        const auto& c = jt.at("coeff");
        term.coeff = Complex(c.at(0).get<double>(), c.at(1).get<double>());
        for (const auto& jf : jt.at("factors"))
            term.factors.push_back(
                TimeFactor{jf.at("t").get<double>(), matrix_from_json(jf.at("matrix"))});
        e.add_term(std::move(term));
    }
    return e;
}

GeneratorFamily family_from_json(const Json& j) {
    const auto kind = j.at("kind").get<std::string>();
    const double a = j.value("a", 0.0);
    const double b = j.value("b", 1.0);
    if (kind == "constant") return constant_family(matrix_from_json(j.at("matrix")), a, b);
    if (kind == "step") {
        std::vector<double> breaks = j.at("breaks").get<std::vector<double>>();
        std::vector<ComplexMatrix> pieces;
        for (const auto& p : j.at("pieces")) pieces.push_back(matrix_from_json(p));
        return step_family(breaks, pieces);
    }
    if (kind == "tabulated") {
        std::vector<double> times = j.at("times").get<std::vector<double>>();
        std::vector<ComplexMatrix> samples;
        for (const auto& p : j.at("samples")) samples.push_back(matrix_from_json(p));
        return tabulated_family(times, samples);
    }
    if (kind == "named")
        return named_family(j.at("name").get<std::string>(),
                            j.value("params", std::vector<double>{}), a, b);
    throw std::invalid_argument("family_from_json: unknown kind '" + kind + "'");
}

}  // namespace chronocalc
