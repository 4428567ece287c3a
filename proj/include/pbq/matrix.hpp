#pragma once

#include <cstddef>
#include <vector>

#include "pbq/scalar.hpp"

namespace pbq {

// Dense matrix over Scalar. All entries of one matrix share the scalar variant
// (exact or approximate); cross-variant operations fail inside Scalar.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const Scalar& fill);

    static Matrix identity(std::size_t n, const Scalar& one);
    static Matrix zero(std::size_t rows, std::size_t cols, const Scalar& zero);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    // Diagonal with one repeated entry; fills *value when requested.
    bool is_scalar(Scalar* value = nullptr) const;
    bool is_diagonal() const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& c, const Matrix& a);
    Matrix operator-() const;

    // Conjugate transpose.
    friend Matrix dagger(const Matrix& a);
    // Non-negative integer power; pow(a, 0) is the identity.
    friend Matrix pow(const Matrix& a, unsigned long e);

    bool equals(const Matrix& other) const;
    friend bool operator==(const Matrix& a, const Matrix& b) { return a.equals(b); }

    // Largest entry magnitude at the given evaluation precision; exact zero
    // matrices report 0 without numeric evaluation.
    Real max_abs(unsigned digits) const;

  private:
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;

    void check_same_shape_(const Matrix& other) const;
};

}  // namespace pbq
