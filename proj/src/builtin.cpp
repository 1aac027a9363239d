#include "baric/builtin.hpp"

namespace baric {

Algebra two_weight_cycle(const FieldSpec& spec) {
    Algebra a(spec, 3);
    const FieldValue one = FieldValue::one(spec);
    // 1-based triples (i, j, k) with gamma = 1
    const int triples[][3] = {
        {1, 1, 2}, {2, 2, 2}, {3, 3, 2}, {1, 2, 1}, {2, 1, 3},
        {1, 3, 2}, {3, 1, 2}, {2, 3, 3}, {3, 2, 3},
    };
    for (const auto& t : triples) a.set_gamma(t[0] - 1, t[1] - 1, t[2] - 1, one);
    return a;
}

Algebra idempotent_pair(const FieldSpec& spec) {
    Algebra a(spec, 2);
    const FieldValue one = FieldValue::one(spec);
    a.set_gamma(0, 0, 0, one);  // e1^2 = e1
    a.set_gamma(1, 1, 1, one);  // e2^2 = e2
    a.set_gamma(0, 1, 0, one);  // e1 e2 = e1 + e2
    a.set_gamma(0, 1, 1, one);
    return a;
}

Algebra scalar_line(const FieldSpec& spec) {
    Algebra a(spec, 1);
    a.set_gamma(0, 0, 0, FieldValue::one(spec));
    return a;
}

Algebra unique_weight_product(const FieldSpec& spec) {
    return direct_product(idempotent_pair(spec), scalar_line(spec));
}

Algebra constant_product(std::size_t n, const FieldSpec& spec) {
    Algebra a(spec, n);
    const FieldValue one = FieldValue::one(spec);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.set_gamma(i, j, 0, one);
    return a;
}

Algebra uniform_tensor(std::size_t n, const FieldSpec& spec) {
    FieldValue c = FieldValue::from_integer(static_cast<long>(n), spec).inverse();
    Algebra a(spec, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) a.set_gamma(i, j, k, c);
    return a;
}

}  // namespace baric
