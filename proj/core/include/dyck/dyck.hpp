#ifndef DYCK_DYCK_HPP
#define DYCK_DYCK_HPP

#include "dyck/alphabet.hpp"
#include "dyck/approximation.hpp"
#include "dyck/errors.hpp"
#include "dyck/free_group.hpp"
#include "dyck/oracle.hpp"
#include "dyck/permutation.hpp"
#include "dyck/quotient.hpp"
#include "dyck/recognizer.hpp"
#include "dyck/separation.hpp"
#include "dyck/word.hpp"

#endif
