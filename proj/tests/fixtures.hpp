#pragma once

#include "paracon/kb_model.hpp"

namespace paracon::testing {

inline Literal pos(const char* name) { return positive(Atom(name)); }
inline Literal neg(const char* name) { return negative(Atom(name)); }

// K1 = {p1, p2, !p3}, K2 = {p2, p3, !p1}
inline Entity simple_k1() { return Entity("K1", {pos("p1"), pos("p2"), neg("p3")}); }
inline Entity simple_k2() { return Entity("K2", {pos("p2"), pos("p3"), neg("p1")}); }

// The five diagnostic records.
inline KnowledgeBase medical_kb() {
    return KnowledgeBase({
        Entity("K1", {pos("fievre"), pos("toux"), neg("maux_de_tete")}),
        Entity("K2", {pos("fievre"), neg("toux"), pos("maux_de_tete")}),
        Entity("K3", {pos("fievre"), pos("toux"), pos("fatigue")}),
        Entity("K4", {pos("essoufflement"), pos("vomissements"), neg("fievre")}),
        Entity("K5", {pos("essoufflement"), neg("vomissements"), pos("douleur_abdominale")}),
    });
}

}  // namespace paracon::testing
