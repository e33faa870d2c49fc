#ifndef SWAPPOLY_EVALUATE_HPP
#define SWAPPOLY_EVALUATE_HPP

#include <map>

#include "swappoly/matrix.hpp"
#include "swappoly/ncpoly.hpp"
#include "swappoly/tensor.hpp"

namespace swappoly {

class Rng;

// Evaluation point: one d x d matrix per variable.
class Assignment {
  public:
    Assignment() : d_(0) {}
    explicit Assignment(int d) : d_(d) {}

    int d() const { return d_; }
    void set(const Letter& v, Matrix m);
    const Matrix& at(const Letter& v) const;
    bool has(const Letter& v) const { return mats_.count(v) != 0; }
    const std::map<Letter, Matrix>& map() const { return mats_; }

    // integer matrices with entries uniform in [-9, 9] for every listed variable
    static Assignment random(Rng& rng, int d, const std::vector<Letter>& vars);

  private:
    int d_;
    std::map<Letter, Matrix> mats_;
};

Matrix eval(const Word& w, const Assignment& a);
Matrix eval(const NcPoly& p, const Assignment& a);
TensorOperator eval_tensor(const TensorPoly2& t, const Assignment& a);

} // namespace swappoly

#endif
