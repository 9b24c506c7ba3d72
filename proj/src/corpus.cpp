#include "bhk/verify.hpp"

namespace bhk {

// Square invertible superpotentials built from one-variable powers, chains
// and cycles, ranks 2 through 4. Determinants stay <= 81 so the subgroup
// sweeps cover every invariant subgroup, and the Smith exponents stay small
// enough that the brute-force dual sweeps remain cheap.
const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries{
        {"fermat-333", {"x", "y", "z"}, "x^3 + y^3 + z^3"},
        {"fermat-222", {"x", "y", "z"}, "x^2 + y^2 + z^2"},
        {"fermat-442", {"x", "y", "z"}, "x^4 + y^4 + z^2"},
        {"loop-222", {"x", "y", "z"}, "x^2*y + y^2*z + z^2*x"},
        {"chain-222", {"x", "y", "z"}, "x^2*y + y^2*z + z^2"},
        {"chain-322", {"x", "y", "z"}, "x^3*y + y^2*z + z^2"},
        {"fermat2-chain23", {"x", "y", "z"}, "x^2 + y^2*z + z^3"},
        {"fermat3-loop22", {"x", "y", "z"}, "x^3 + y^2*z + z^2*y"},
        {"fermat-22", {"x", "y"}, "x^2 + y^2"},
        {"fermat-33", {"x", "y"}, "x^3 + y^3"},
        {"fermat-24", {"x", "y"}, "x^2 + y^4"},
        {"chain-32", {"x", "y"}, "x^3*y + y^2"},
        {"chain-23", {"x", "y"}, "x^2*y + y^3"},
        {"chain-42", {"x", "y"}, "x^4*y + y^2"},
        {"loop-22", {"x", "y"}, "x^2*y + y^2*x"},
        {"loop-33", {"x", "y"}, "x^3*y + y^3*x"},
        {"fermat-3333", {"x", "y", "z", "w"}, "x^3 + y^3 + z^3 + w^3"},
        {"fermat-2222", {"x", "y", "z", "w"}, "x^2 + y^2 + z^2 + w^2"},
        {"loop22-loop22", {"x", "y", "z", "w"}, "x^2*y + y^2*x + z^2*w + w^2*z"},
        {"chain22-chain22", {"x", "y", "z", "w"}, "x^2*y + y^2 + z^2*w + w^2"},
        {"fermat2-chain222", {"x", "y", "z", "w"}, "x^2 + y^2*z + z^2*w + w^2"},
        {"fermat33-loop22", {"x", "y", "z", "w"}, "x^3 + y^3 + z^2*w + w^2*z"},
    };
    return entries;
}

} // namespace bhk
