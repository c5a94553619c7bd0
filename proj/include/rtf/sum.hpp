#ifndef RTF_SUM_HPP
#define RTF_SUM_HPP

// Neumaier compensated accumulation, real and complex.  Used by every
// series with more than a handful of terms; summation order is always
// index order, so results are reproducible.

#include "rtf/cplx.hpp"

namespace rtf {

template <class R>
class CompSum {
public:
    void add(R x) {
        R t = s_ + x;
        if (fabs(s_) >= fabs(x))
            c_ += (s_ - t) + x;
        else
            c_ += (x - t) + s_;
        s_ = t;
    }
    R value() const { return s_ + c_; }

private:
    R s_{0.0}, c_{0.0};
};

template <class R>
class CplxSum {
public:
    void add(Cplx<R> z) { re_.add(z.re); im_.add(z.im); }
    Cplx<R> value() const { return Cplx<R>(re_.value(), im_.value()); }

private:
    CompSum<R> re_, im_;
};

} // namespace rtf

#endif
