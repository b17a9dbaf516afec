package org.apache.hadoop.hdfs.util;

import java.util.ArrayList;
import java.util.List;

/**
 * A low memory linked hash set implementation, which uses an array for
 * storing the elements and linked lists for collision resolution. In
 * addition it stores elements in a doubly linked list.
 */
public class LightWeightLinkedSet<T> extends LightWeightHashSet<T> {

  private DoubleLinkedElement<T> head;
  private DoubleLinkedElement<T> tail;

  /**
   * Remove and return first element on the linked list of all elements.
   *
   * @return first element
   */
  public T pollFirst() {
    if (head == null) {
      return null;
    }
    T first = head.element;
    head = head.after;
    return first;
  }

  /**
   * Remove and return n elements from the hashtable.
   * The order in which entries are removed corresponds
   * to the order in which they were inserted.
   *
   * @return first element
   */
  @Override
  public List<T> pollN(int n) {
    if (n >= size) {
      return pollAll();
    }
    List<T> retList = new ArrayList<T>(n);
    while (n-- > 0 && head != null) {
      retList.add(pollFirst());
    }
    return retList;
  }

  private static class DoubleLinkedElement<T> extends LinkedElement<T> {
    private DoubleLinkedElement<T> before;
    private DoubleLinkedElement<T> after;

    public DoubleLinkedElement(T elem, int hashCode) {
      super(elem, hashCode);
    }
  }
}
