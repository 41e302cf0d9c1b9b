#include "bellcomb/serialize.hpp"

#include "bellcomb/errors.hpp"

namespace bellcomb {

using nlohmann::json;

json to_json(const SetPartition& p)
{
    json out = json::array();
    for (const auto& block : p.blocks())
        out.push_back(block);
    return out;
}

SetPartition partition_from_json(const json& j)
{
    if (!j.is_array())
        throw MalformedInput("partition JSON must be a list of lists");
    std::vector<Block> blocks;
    try {
        for (const auto& block : j)
            blocks.push_back(block.get<Block>());
    } catch (const json::exception& e) {
        throw MalformedInput(std::string("partition JSON: ") + e.what());
    }
    return SetPartition(std::move(blocks));
}

json to_json(const Rgs& w)
{
    return w.word();
}

Rgs rgs_from_json(const json& j)
{
    try {
        return Rgs(j.get<std::vector<int>>());
    } catch (const json::exception& e) {
        throw MalformedInput(std::string("RGS JSON: ") + e.what());
    }
}

json to_json(const BellPolynomial& p)
{
    json out = json::array();
    for (const auto& [m, c] : p.terms()) {
        json powers = json::array();
        for (const auto& [index, exp] : m.powers())
            powers.push_back({index, exp});
        out.push_back({{"exponents", powers}, {"coefficient", c.get_str()}});
    }
    return out;
}

BellPolynomial polynomial_from_json(const json& j)
{
    if (!j.is_array())
        throw MalformedInput("polynomial JSON must be a list of terms");
    BellPolynomial out;
    try {
        for (const auto& term : j) {
            std::vector<std::pair<int, int>> powers;
            for (const auto& pair : term.at("exponents"))
                powers.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
            BigInt coef;
            if (coef.set_str(term.at("coefficient").get<std::string>(), 10) != 0)
                throw MalformedInput("bad coefficient in polynomial JSON");
            out.add_term(Monomial(std::move(powers)), coef);
        }
    } catch (const json::exception& e) {
        throw MalformedInput(std::string("polynomial JSON: ") + e.what());
    }
    return out;
}

json to_json(const VerificationReport& r)
{
    json cells = json::array();
    for (const auto& c : r.cells) {
        json cell = {{"route", c.route}, {"params", c.params}, {"passed", c.passed}, {"detail", c.detail}};
        if (!c.passed)
            cell["counterexample"] = c.counterexample;
        cells.push_back(std::move(cell));
    }
    return {
        {"identity", r.identity},
        {"mode", r.mode},
        {"max_n", r.max_n},
        {"seed", r.seed},
        {"status", r.passed() ? "pass" : "fail"},
        {"failures", r.failures()},
        {"elapsed_ms", r.elapsed_ms},
        {"cells", std::move(cells)},
    };
}

} // namespace bellcomb
