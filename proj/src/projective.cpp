#include "nodelift/projective.hpp"
#include "nodelift/error.hpp"

namespace nodelift {

ProjPoint::ProjPoint(Vector coords) : coords_(std::move(coords))
{
    if (coords_.empty())
        throw Error(ErrorCode::InvalidArgument, "empty point");
    std::size_t piv = pivot();
    if (piv == coords_.size())
        throw Error(ErrorCode::InvalidArgument, "projective point with all coordinates zero");
    Scalar inv = coords_[piv].inverse();
    for (auto& c : coords_)
        c *= inv;
}

std::size_t ProjPoint::pivot() const
{
    std::size_t i = 0;
    while (i < coords_.size() && coords_[i].is_zero())
        ++i;
    return i;
}

std::string ProjPoint::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i)
            s += ",";
        s += coords_[i].to_string();
    }
    return s + ")";
}

bool lexicographic_less(const Vector& a, const Vector& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), Scalar::canonical_less);
}

bool lexicographic_less(const Matrix& a, const Matrix& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Vector& x, const Vector& y) { return lexicographic_less(x, y); });
}

bool operator<(const ProjPoint& a, const ProjPoint& b) { return lexicographic_less(a.coords_, b.coords_); }

} // namespace nodelift
