#include "baranski/simplify.hpp"

#include "baranski/error.hpp"

namespace baranski {

SimplificationStep one_step(const CrossAutomaton& cross) {
    const auto cls = classify(cross);
    if (cls.kind != CrossClass::Class2 && cls.kind != CrossClass::Class1)
        throw Error(Errc::NotClass2, std::string("one-step simplification needs a Class 2 automaton, got ") +
                                         cross_class_name(cls.kind) +
                                         (cls.reason.empty() ? "" : " (" + cls.reason + ")"));

    const auto graph = relation_graph(cross, Relation::V);
    std::optional<LetterPair> pick;
    for (const auto& [tau, kappa] : cross.pv()) {
        if (!graph.is_maximal(kappa)) continue;
        if (!pick || std::pair(kappa, tau) < std::pair(pick->second, pick->first)) pick = LetterPair{tau, kappa};
    }
    if (!pick) throw Error(Errc::Internal, "acyclic nonempty PV without a maximal head");

    PairSet pv = cross.pv();
    pv.erase(*pick);
    SimplificationStep step{cross, cross.with_pv(std::move(pv)), *pick, *cls.gamma, *cls.lambda, true};
    const Letter tau = step.tau(), kappa = step.kappa();
    step.gSupported = cross.alphabet_size() >= 3 && step.gamma != step.lambda && kappa != step.gamma &&
                      kappa != step.lambda && tau != step.gamma && tau != kappa;

    const auto after = classify(step.after);
    const auto expected = step.after.pv().empty() ? CrossClass::Class0 : CrossClass::Class2;
    if (after.kind != expected)
        throw Error(Errc::Internal, std::string("simplified automaton is ") + cross_class_name(after.kind) +
                                        ", expected " + cross_class_name(expected));
    return step;
}

SimplificationChain final_chain(const CrossAutomaton& cross) {
    SimplificationChain chain{cross, {}};
    const auto cls = classify(cross);
    if (cls.kind == CrossClass::Class0) return chain;
    if (cls.kind != CrossClass::Class2 && cls.kind != CrossClass::Class1)
        throw Error(Errc::NotClass2, std::string("final simplification needs a Class 2 automaton, got ") +
                                         cross_class_name(cls.kind) +
                                         (cls.reason.empty() ? "" : " (" + cls.reason + ")"));
    const CrossAutomaton* current = &cross;
    while (!current->pv().empty()) {
        chain.steps.push_back(one_step(*current));
        current = &chain.steps.back().after;
    }
    return chain;
}

nlohmann::json to_json(const SimplificationStep& step) {
    return {{"before", cross_to_json(step.before)},
            {"after", cross_to_json(step.after)},
            {"tau", step.tau()},
            {"kappa", step.kappa()},
            {"gamma", step.gamma},
            {"lambda", step.lambda},
            {"gSupported", step.gSupported}};
}

nlohmann::json to_json(const SimplificationChain& chain) {
    auto arr = nlohmann::json::array();
    for (const auto& s : chain.steps) arr.push_back(to_json(s));
    return arr;
}

}  // namespace baranski
