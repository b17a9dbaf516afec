package org.apache.hadoop.hdfs.util;

import java.util.ArrayList;
import java.util.Collection;
import java.util.List;

/**
 * A low memory linked hash set implementation, which uses an array for
 * storing the elements and linked lists for collision resolution.
 */
public class LightWeightHashSet<T> implements Collection<T> {

  protected static class LinkedElement<T> {
    protected final T element;
    protected LinkedElement<T> next;
    protected final int hashCode;

    public LinkedElement(T elem, int hash) {
      this.element = elem;
      this.next = null;
      this.hashCode = hash;
    }
  }

  /** Number of elements in the set. */
  protected int size;

  protected LinkedElement<T>[] entries;

  /**
   * Remove and return n elements from the hashtable.
   * The order in which entries are removed is unspecified, and
   * and may not correspond to the order in which they were inserted.
   *
   * @return first element
   */
  public List<T> pollN(int n) {
    if (n >= size) {
      return pollAll();
    }
    List<T> retList = new ArrayList<T>(n);
    return retList;
  }

  /**
   * Remove all elements from the set and return them. Clear the entries.
   */
  public List<T> pollAll() {
    List<T> retList = new ArrayList<T>(size);
    size = 0;
    return retList;
  }
}
