#include "minvar/jsonio.hpp"

#include "minvar/error.hpp"

namespace minvar {

Json to_json(const Integer& x)
{
    if (x.fits_slong_p())
        return Json(static_cast<std::int64_t>(x.get_si()));
    return Json(x.get_str());
}

Json to_json(const IntVector& v)
{
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(to_json(x));
    return out;
}

Json to_json(const IntMatrix& m)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        out.push_back(to_json(m.row(i)));
    return out;
}

Json to_json(const LaurentPoly& f)
{
    Json out = Json::array();
    for (const auto& [e, c] : f.terms())
        out.push_back({{"exponents", e}, {"coeff", c}});
    return out;
}

Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Integer(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        Integer x;
        if (x.set_str(j.get<std::string>(), 10) != 0)
            throw InvalidInput("not an integer: " + j.get<std::string>());
        return x;
    }
    throw InvalidInput("expected an integer, got " + j.dump());
}

IntVector vector_from_json(const Json& j)
{
    if (!j.is_array())
        throw InvalidInput("expected an integer list, got " + j.dump());
    IntVector v;
    for (const auto& x : j)
        v.push_back(integer_from_json(x));
    return v;
}

IntMatrix matrix_from_json(const Json& j)
{
    if (!j.is_array() || j.empty())
        throw InvalidInput("expected a nonempty list of rows");
    std::vector<IntVector> rows;
    for (const auto& r : j) {
        rows.push_back(vector_from_json(r));
        if (rows.back().size() != rows.front().size())
            throw InvalidInput("ragged matrix");
    }
    if (rows.front().empty())
        throw InvalidInput("matrix with empty rows");
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.cols(); ++k)
            m(i, k) = rows[i][k];
    return m;
}

Json generators_json(const MatGroup& g)
{
    Json out = Json::array();
    for (const auto& m : g.generators())
        out.push_back(to_json(m));
    return out;
}

std::vector<IntMatrix> matrices_from_json(const Json& j)
{
    if (!j.is_array())
        throw InvalidInput("expected a list of matrices");
    std::vector<IntMatrix> out;
    for (const auto& m : j)
        out.push_back(matrix_from_json(m));
    return out;
}

}  // namespace minvar
