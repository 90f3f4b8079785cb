#include "lebdec/json_io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

namespace lebdec {

Json matrix_to_json(const CMatrix& m) {
    Json re = Json::array(), im = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json rrow = Json::array(), irow = Json::array();
        for (int j = 0; j < m.cols(); ++j) {
            rrow.push_back(m(i, j).real());
            irow.push_back(m(i, j).imag());
        }
        re.push_back(rrow);
        im.push_back(irow);
    }
    return Json{{"dim", m.rows()}, {"re", re}, {"im", im}};
}

CMatrix matrix_from_json(const Json& j) {
    try {
        int dim = j.at("dim").get<int>();
        if (dim < 1) throw ParseError("matrix dim must be >= 1");
        const Json& re = j.at("re");
        CMatrix m(dim, dim);
        bool has_im = j.contains("im");
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c)
                m(r, c) = Complex(
                    re.at(r).at(c).get<double>(),
                    has_im ? j.at("im").at(r).at(c).get<double>() : 0.0);
        return m;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad matrix JSON: ") + e.what());
    }
}

Json algebra_to_json(const BlockAlgebra& a) {
    return Json{{"blocks", a.block_dims()}};
}

BlockAlgebra algebra_from_json(const Json& j) {
    try {
        return BlockAlgebra(j.at("blocks").get<std::vector<int>>());
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad algebra JSON: ") + e.what());
    }
}

Json element_to_json(const AlgebraElement& x) {
    Json blocks = Json::array();
    for (const CMatrix& b : x.blocks()) blocks.push_back(matrix_to_json(b));
    return Json{{"algebra", algebra_to_json(x.algebra())}, {"blocks", blocks}};
}

AlgebraElement element_from_json(const Json& j) {
    try {
        BlockAlgebra alg = algebra_from_json(j.at("algebra"));
        std::vector<CMatrix> blocks;
        for (const Json& b : j.at("blocks")) blocks.push_back(matrix_from_json(b));
        return AlgebraElement(std::move(alg), std::move(blocks));
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad element JSON: ") + e.what());
    }
}

Json functional_to_json(const PositiveFunctional& f) {
    return Json{{"algebra", algebra_to_json(f.algebra())},
                {"density", element_to_json(f.density_element())}};
}

PositiveFunctional functional_from_json(const Json& j, const Tolerances& tol) {
    try {
        BlockAlgebra alg = algebra_from_json(j.at("algebra"));
        AlgebraElement density = element_from_json(j.at("density"));
        return PositiveFunctional(alg, density.blocks(), tol);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad functional JSON: ") + e.what());
    }
}

std::vector<std::vector<int>> cayley_from_json(const Json& j) {
    try {
        auto table = j.at("table").get<std::vector<std::vector<int>>>();
        if (j.contains("order") &&
            j.at("order").get<size_t>() != table.size())
            throw ParseError("order does not match table size");
        return table;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad Cayley table JSON: ") + e.what());
    }
}

Json generators_to_json(const GeneratorPresentation& p) {
    Json gens = Json::array();
    for (const CMatrix& g : p.generators()) gens.push_back(matrix_to_json(g));
    return Json{{"ambient_dim", p.ambient_dim()}, {"generators", gens}};
}

GeneratorPresentation generators_from_json(const Json& j) {
    try {
        int dim = j.at("ambient_dim").get<int>();
        std::vector<CMatrix> gens;
        for (const Json& g : j.at("generators"))
            gens.push_back(matrix_from_json(g));
        return GeneratorPresentation(dim, std::move(gens));
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad generators JSON: ") + e.what());
    }
}

Json decomposition_to_json(const Decomposition& d) {
    Json alpha;
    if (std::isfinite(d.alpha_min))
        alpha = d.alpha_min;
    else
        alpha = "inf";
    return Json{{"regular", functional_to_json(d.regular)},
                {"singular", functional_to_json(d.singular_part)},
                {"alpha_min", alpha},
                {"unique", d.unique},
                {"iterations_used", d.iterations_used}};
}

Json report_to_json(const VerificationReport& r) {
    Json checks = Json::array();
    for (const CheckResult& c : r.checks)
        checks.push_back(Json{
            {"name", c.name}, {"passed", c.passed}, {"measure", c.measure}});
    return Json{{"checks", checks}, {"all_passed", r.all_passed()}};
}

Json gns_to_json(const GnsData& g) {
    Json rep = Json::array();
    for (const CMatrix& m : g.representation) rep.push_back(matrix_to_json(m));
    Json xi_re = Json::array(), xi_im = Json::array();
    for (int i = 0; i < g.cyclic_vector.size(); ++i) {
        xi_re.push_back(g.cyclic_vector(i).real());
        xi_im.push_back(g.cyclic_vector(i).imag());
    }
    Json kernel = Json::array();
    for (const AlgebraElement& a : g.kernel_basis)
        kernel.push_back(element_to_json(a));
    return Json{{"quotient_dim", g.quotient_dim},
                {"representation", rep},
                {"cyclic_vector", Json{{"re", xi_re}, {"im", xi_im}}},
                {"kernel_basis", kernel}};
}

Json load_json_file(const std::string& path) {
    try {
        if (path == "-") return Json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open " + path);
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw ParseError("cannot parse " + path + ": " + e.what());
    }
}

}  // namespace lebdec
