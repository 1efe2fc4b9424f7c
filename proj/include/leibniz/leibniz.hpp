#ifndef LEIBNIZ_LEIBNIZ_HPP
#define LEIBNIZ_LEIBNIZ_HPP

#include <leibniz/polynomial.hpp>
#include <leibniz/algebra_table.hpp>
#include <leibniz/linalg.hpp>
#include <leibniz/structure.hpp>
#include <leibniz/text_format.hpp>
#include <leibniz/constructions.hpp>
#include <leibniz/analysis.hpp>

#endif  // LEIBNIZ_LEIBNIZ_HPP
