#include "minvar/corpus.hpp"

#include "minvar/laurent.hpp"

namespace minvar {

namespace {

IntMatrix perm(const std::vector<std::size_t>& images)
{
    IntMatrix m(images.size(), images.size());
    for (std::size_t j = 0; j < images.size(); ++j)
        m(images[j], j) = 1;
    return m;
}

std::vector<CorpusEntry> make_corpus()
{
    std::vector<CorpusEntry> c;
    for (std::size_t n = 1; n <= 5; ++n)
        c.push_back({"inversion" + std::to_string(n), "<-I_" + std::to_string(n) + ">",
                     {-IntMatrix::identity(n)}, {2, 3}});
    c.push_back({"G1", "x -> x^-1, y <-> z", {g1_generator()}, {2, 3}});
    c.push_back({"G2", "two disjoint coordinate swaps on Z^4", {perm({1, 0, 3, 2})}, {2, 3}});
    c.push_back({"Gamma", "<g_1, diag(-1,1,1)>", {g1_generator(), gamma_extra_generator()}, {2, 3}});
    c.push_back({"S3", "S_3 permuting coordinates of Z^3", {perm({1, 0, 2}), perm({0, 2, 1})}, {2, 3}});
    c.push_back({"S4", "S_4 permuting coordinates of Z^4", {perm({1, 0, 2, 3}), perm({1, 2, 3, 0})}, {2, 3}});
    c.push_back({"Z4rot", "order-4 rotation of Z^2", {IntMatrix{{0, -1}, {1, 0}}}, {2, 3}});
    c.push_back({"Z4U", "Z/4 on Z[s]/(s-1)(s^2+1)", {IntMatrix{{0, 0, 1}, {1, 0, -1}, {0, 1, 1}}}, {2, 3}});
    c.push_back({"diag3", "<diag(-1,-1,-1,1)>", {IntMatrix{{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}}}, {2}});
    c.push_back({"Z3rot", "order-3 rotation of Z^2", {IntMatrix{{0, -1}, {1, -1}}}, {2, 3}});
    c.push_back({"Z6rot", "order-6 rotation of Z^2", {IntMatrix{{0, -1}, {1, 1}}}, {2, 3}});
    c.push_back({"C3perm", "3-cycle permuting coordinates of Z^3", {perm({1, 2, 0})}, {2, 3}});
    c.push_back({"Z3block", "order-3 rotation on both planes of Z^4",
                 {IntMatrix{{0, -1, 0, 0}, {1, -1, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, -1}}}, {2, 3}});
    return c;
}

}  // namespace

const std::vector<CorpusEntry>& builtin_corpus()
{
    static const std::vector<CorpusEntry> corpus = make_corpus();
    return corpus;
}

std::optional<CorpusEntry> find_builtin(const std::string& name)
{
    for (const auto& e : builtin_corpus())
        if (e.name == name)
            return e;
    return std::nullopt;
}

}  // namespace minvar
