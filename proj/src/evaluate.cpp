#include "swappoly/evaluate.hpp"

#include "swappoly/error.hpp"
#include "swappoly/rng.hpp"

namespace swappoly {

void Assignment::set(const Letter& v, Matrix m) {
    if (m.rows() != d_ || m.cols() != d_) throw DimensionError("assignment matrix is not d x d");
    mats_.insert_or_assign(v, std::move(m));
}

const Matrix& Assignment::at(const Letter& v) const {
    auto it = mats_.find(v);
    if (it == mats_.end()) throw Error("unassigned variable " + v.str());
    return it->second;
}

Assignment Assignment::random(Rng& rng, int d, const std::vector<Letter>& vars) {
    Assignment a(d);
    for (const auto& v : vars) a.set(v, random_int_matrix(rng, d));
    return a;
}

Matrix eval(const Word& w, const Assignment& a) {
    Matrix m = Matrix::identity(a.d());
    for (const auto& l : w.letters()) m = m * a.at(l);
    return m;
}

Matrix eval(const NcPoly& p, const Assignment& a) {
    Matrix acc(a.d(), a.d());
    for (const auto& [w, c] : p.terms()) acc += c * eval(w, a);
    return acc;
}

TensorOperator eval_tensor(const TensorPoly2& t, const Assignment& a) {
    TensorOperator acc(a.d(), 2);
    for (const auto& [k, c] : t.terms())
        acc = acc + c * kron(TensorOperator::from_matrix(eval(k.first, a)),
                             TensorOperator::from_matrix(eval(k.second, a)));
    return acc;
}

} // namespace swappoly
